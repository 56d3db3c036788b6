#include "stringy/cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "stringy/epoly.hpp"
#include "stringy/gamma.hpp"
#include "stringy/hitchin.hpp"
#include "stringy/hklinear.hpp"
#include "stringy/intlattice.hpp"
#include "stringy/json_io.hpp"
#include "stringy/numeric.hpp"
#include "stringy/orbifold.hpp"
#include "stringy/torus.hpp"

namespace stringy {

Command command_from_string(const std::string& name) {
    if (name == "mirror-test") return Command::MirrorTest;
    if (name == "stringy") return Command::Stringy;
    if (name == "twisted") return Command::Twisted;
    if (name == "dims") return Command::Dims;
    if (name == "lemma-sweep") return Command::LemmaSweep;
    if (name == "duality-sweep") return Command::DualitySweep;
    throw std::invalid_argument("unknown command \"" + name + "\"");
}

std::string to_string(Command command) {
    switch (command) {
        case Command::MirrorTest: return "mirror-test";
        case Command::Stringy: return "stringy";
        case Command::Twisted: return "twisted";
        case Command::Dims: return "dims";
        case Command::LemmaSweep: return "lemma-sweep";
        case Command::DualitySweep: return "duality-sweep";
    }
    throw std::logic_error("unreachable command value");
}

OutputFormat format_from_string(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format \"" + name + "\" (expected text, json or csv)");
}

namespace {

// Bad flags and malformed inputs exit with code 2; failed checks with 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string body;
    bool pass = true;
};

std::int64_t require_param(const RunConfig& config, const std::string& key) {
    auto it = config.params.find(key);
    if (it == config.params.end()) throw UsageError("missing required parameter --" + key);
    return it->second;
}

std::int64_t param_or(const RunConfig& config, const std::string& key, std::int64_t fallback) {
    auto it = config.params.find(key);
    return it == config.params.end() ? fallback : it->second;
}

int narrow(std::int64_t value, const std::string& what) {
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
        throw UsageError(what + " out of range");
    return static_cast<int>(value);
}

const char* verdict(bool pass) { return pass ? "PASS" : "FAIL"; }

std::string pad(std::string label, std::size_t width) {
    label.resize(std::max(width, label.size()), ' ');
    return label;
}

std::string ratio(std::int64_t hits, std::int64_t total) {
    return std::to_string(hits) + "/" + std::to_string(total);
}

std::string csv_of_epoly(const EPolynomial& poly) {
    std::ostringstream out;
    out << "p,q,coeff\n";
    for (const auto& [key, coeff] : poly.terms())
        out << key.first << "," << key.second << "," << coeff.str() << "\n";
    return out.str();
}

struct PresentationInput {
    OrbifoldPresentation presentation;
    bool generated;  // built by the rank-2/3 generators rather than read from --in
};

PresentationInput obtain_presentation(const RunConfig& config) {
    if (config.input_path)
        return {presentation_from_json(load_json_file(*config.input_path)), false};
    if (config.params.contains("n")) {
        const std::int64_t n = require_param(config, "n");
        const int g = narrow(require_param(config, "g"), "--g");
        const int m = narrow(require_param(config, "m"), "--m");
        try {
            if (n == 2) return {generate_rank2_presentation(g, m), true};
            if (n == 3) return {generate_rank3_presentation(g, m), true};
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        throw UsageError("generated presentations support --n 2 or --n 3 only");
    }
    throw UsageError("need --in <presentation.json>, or --n/--g/--m to generate one");
}

Report cmd_mirror_test(const RunConfig& config) {
    const int g = narrow(require_param(config, "g"), "--g");
    const int m = narrow(require_param(config, "m"), "--m");
    EPolynomial lhs, rhs;
    try {
        lhs = stringy_e(generate_rank2_presentation(g, m));
        rhs = closed_form_rank2(g, m);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Report report;
    report.pass = lhs == rhs;
    std::ostringstream out;
    switch (config.format) {
        case OutputFormat::Text:
            out << "mirror-test g=" << g << " m=" << m << "\n";
            out << pad("stringy_e", 11) << " = " << lhs.to_string() << "\n";
            out << pad("closed_form", 11) << " = " << rhs.to_string() << "\n";
            out << pad("verdict", 11) << " = " << verdict(report.pass) << "\n";
            break;
        case OutputFormat::Json: {
            Json json;
            json["command"] = "mirror-test";
            json["g"] = g;
            json["m"] = m;
            json["stringy_e"] = epoly_to_json(lhs);
            json["closed_form"] = epoly_to_json(rhs);
            json["verdict"] = verdict(report.pass);
            out << dump_json(json);
            break;
        }
        case OutputFormat::Csv:
            out << "g,m,verdict\n" << g << "," << m << "," << verdict(report.pass) << "\n";
            break;
    }
    report.body = out.str();
    return report;
}

Report cmd_stringy(const RunConfig& config) {
    const PresentationInput input = obtain_presentation(config);
    const OrbifoldPresentation& presentation = input.presentation;
    const EPolynomial poly = stringy_e(presentation);
    Report report;
    std::ostringstream out;
    switch (config.format) {
        case OutputFormat::Text:
            out << "stringy n=" << presentation.group().modulus
                << " g=" << presentation.group().genus
                << " sectors=" << presentation.sectors().size() << "\n";
            out << "epoly = " << poly.to_string() << "\n";
            break;
        case OutputFormat::Json: {
            Json json;
            json["command"] = "stringy";
            json["n"] = presentation.group().modulus;
            json["g"] = presentation.group().genus;
            json["sectors"] = presentation.sectors().size();
            if (input.generated) json["presentation"] = presentation_to_json(presentation);
            json["epoly"] = epoly_to_json(poly);
            out << dump_json(json);
            break;
        }
        case OutputFormat::Csv: out << csv_of_epoly(poly); break;
    }
    report.body = out.str();
    return report;
}

Report cmd_twisted(const RunConfig& config) {
    const std::int64_t c = require_param(config, "c");
    const PresentationInput input = obtain_presentation(config);
    const OrbifoldPresentation& presentation = input.presentation;
    const TorsionClass rho = standard_rho(presentation.group());
    const EPolynomial twisted = twisted_stringy_e(presentation, rho, c);
    const bool check_untwisted = mod_reduce(c, presentation.group().modulus) == 0;
    bool consistent = true;
    if (check_untwisted) consistent = twisted == stringy_e(presentation);
    Report report;
    report.pass = consistent;
    std::ostringstream out;
    switch (config.format) {
        case OutputFormat::Text:
            out << "twisted n=" << presentation.group().modulus
                << " g=" << presentation.group().genus << " c=" << c << "\n";
            out << "epoly = " << twisted.to_string() << "\n";
            if (check_untwisted) out << "consistency = " << verdict(consistent) << "\n";
            break;
        case OutputFormat::Json: {
            Json json;
            json["command"] = "twisted";
            json["n"] = presentation.group().modulus;
            json["g"] = presentation.group().genus;
            json["c"] = c;
            json["epoly"] = epoly_to_json(twisted);
            if (check_untwisted) json["consistency"] = verdict(consistent);
            out << dump_json(json);
            break;
        }
        case OutputFormat::Csv: out << csv_of_epoly(twisted); break;
    }
    report.body = out.str();
    return report;
}

Report cmd_dims(const RunConfig& config) {
    const int n = narrow(require_param(config, "n"), "--n");
    const int g = narrow(require_param(config, "g"), "--g");
    const int m = narrow(require_param(config, "m"), "--m");
    std::int64_t dim_m, dim_base, genus_spectral, dim_prym;
    try {
        const CurveSetup setup(g, n, m, param_or(config, "c", 1), param_or(config, "d", 1),
                               /*generic_weights=*/m >= 1, /*coprime_case=*/false);
        const SpectralData data(n, g, 2 * g - 2 + m);
        dim_m = moduli_dim(setup);
        dim_base = hitchin_base_dim(setup);
        genus_spectral = spectral_genus(data);
        dim_prym = prym_dim(data);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Report report;
    report.pass = 2 * dim_base == dim_m && dim_base == dim_prym;
    std::ostringstream out;
    switch (config.format) {
        case OutputFormat::Json: {
            Json json;
            json["command"] = "dims";
            json["n"] = n;
            json["g"] = g;
            json["m"] = m;
            json["moduli_dim"] = dim_m;
            json["hitchin_base_dim"] = dim_base;
            json["spectral_genus"] = genus_spectral;
            json["prym_dim"] = dim_prym;
            json["verdict"] = verdict(report.pass);
            out << dump_json(json);
            break;
        }
        case OutputFormat::Text:
        case OutputFormat::Csv:
            out << "moduli_dim,hitchin_base_dim,spectral_genus,prym_dim,verdict\n";
            out << dim_m << "," << dim_base << "," << genus_spectral << "," << dim_prym << ","
                << verdict(report.pass) << "\n";
            break;
    }
    report.body = out.str();
    return report;
}

Report cmd_lemma_sweep(const RunConfig& config) {
    const int k = narrow(require_param(config, "k"), "--k");
    const std::int64_t count = param_or(config, "count", 100);
    if (k < 1) throw UsageError("--k must be positive");
    if (count < 1) throw UsageError("--count must be positive");
    const std::uint64_t seed = config.seed.value_or(0);
    const HyperkahlerModel model = HyperkahlerModel::standard(k);
    std::mt19937_64 rng(seed);
    std::int64_t holomorphic = 0, special = 0;
    for (std::int64_t i = 0; i < count; ++i) {
        const LinearSubspace subspace = random_holomorphic_lagrangian(k, rng);
        if (verify_holomorphic_lagrangian(model, subspace)) ++holomorphic;
        if (verify_special_lagrangian(model, subspace)) ++special;
    }
    Report report;
    report.pass = holomorphic == count && special == count;
    std::ostringstream out;
    switch (config.format) {
        case OutputFormat::Text:
            out << "lemma-sweep k=" << k << " count=" << count << " seed=" << seed << "\n";
            out << pad("holomorphic_lagrangian", 22) << " = " << ratio(holomorphic, count)
                << "\n";
            out << pad("special_lagrangian", 22) << " = " << ratio(special, count) << "\n";
            out << "verdict = " << verdict(report.pass) << "\n";
            break;
        case OutputFormat::Json: {
            Json json;
            json["command"] = "lemma-sweep";
            json["k"] = k;
            json["count"] = count;
            json["seed"] = seed;
            json["holomorphic_pass"] = holomorphic;
            json["special_pass"] = special;
            json["verdict"] = verdict(report.pass);
            out << dump_json(json);
            break;
        }
        case OutputFormat::Csv:
            out << "k,count,seed,holomorphic_pass,special_pass,verdict\n";
            out << k << "," << count << "," << seed << "," << holomorphic << "," << special
                << "," << verdict(report.pass) << "\n";
            break;
    }
    report.body = out.str();
    return report;
}

Report cmd_duality_sweep(const RunConfig& config) {
    const int max_dim = narrow(param_or(config, "k", 4), "--k");
    const std::int64_t count = param_or(config, "count", 100);
    if (max_dim < 1) throw UsageError("--k must be positive");
    if (count < 1) throw UsageError("--count must be positive");
    const std::uint64_t seed = config.seed.value_or(0);
    std::mt19937_64 rng(seed);
    std::int64_t double_dual = 0, divisor_invariance = 0, smith_cross = 0, torsor_algebra = 0;
    for (std::int64_t i = 0; i < count; ++i) {
        const int k = 1 + static_cast<int>(i % max_dim);
        const PolarizedLatticeTorus torus = random_polarized_lattice(k, rng);
        const PolarizedLatticeTorus dual = dualize(torus);
        if (dualize(dual).pairing() == torus.canonical().pairing()) ++double_dual;
        if (dual.divisors() == torus.divisors() &&
            syz_dual_fiber(torus).pairing() == dual.pairing())
            ++divisor_invariance;
        std::vector<Int> doubled;
        for (const Int& d : torus.divisors()) {
            doubled.push_back(d);
            doubled.push_back(d);
        }
        if (smith_divisors(torus.pairing()) == doubled) ++smith_cross;
        const TorsorLabel label(torus, /*degree=*/i - 3, FiberSide::SL);
        const TorsorLabel other(torus, /*degree=*/i + 11, FiberSide::SL);
        const TorsorLabel pic = pic_torsor(label, 5);
        const TorsorLabel pic_other = pic_torsor(other, 5);
        const bool algebra = pic.base.pairing() == pic_other.base.pairing() &&
                             pic.degree == 5 && pic_other.degree == 5 &&
                             pic.side == FiberSide::PGL &&
                             pic_torsor(pic, 0).side == FiberSide::SL &&
                             !pic.has_lagrangian_section &&
                             pic_torsor(label, 0).has_lagrangian_section;
        if (algebra) ++torsor_algebra;
    }
    Report report;
    report.pass = double_dual == count && divisor_invariance == count &&
                  smith_cross == count && torsor_algebra == count;
    std::ostringstream out;
    switch (config.format) {
        case OutputFormat::Text:
            out << "duality-sweep count=" << count << " max_dim=" << max_dim
                << " seed=" << seed << "\n";
            out << pad("double_dual", 18) << " = " << ratio(double_dual, count) << "\n";
            out << pad("divisor_invariance", 18) << " = " << ratio(divisor_invariance, count)
                << "\n";
            out << pad("smith_cross_check", 18) << " = " << ratio(smith_cross, count) << "\n";
            out << pad("torsor_algebra", 18) << " = " << ratio(torsor_algebra, count) << "\n";
            out << "verdict = " << verdict(report.pass) << "\n";
            break;
        case OutputFormat::Json: {
            Json json;
            json["command"] = "duality-sweep";
            json["count"] = count;
            json["max_dim"] = max_dim;
            json["seed"] = seed;
            json["double_dual_pass"] = double_dual;
            json["divisor_invariance_pass"] = divisor_invariance;
            json["smith_cross_check_pass"] = smith_cross;
            json["torsor_algebra_pass"] = torsor_algebra;
            json["verdict"] = verdict(report.pass);
            out << dump_json(json);
            break;
        }
        case OutputFormat::Csv:
            out << "count,max_dim,seed,double_dual_pass,divisor_invariance_pass,"
                   "smith_cross_check_pass,torsor_algebra_pass,verdict\n";
            out << count << "," << max_dim << "," << seed << "," << double_dual << ","
                << divisor_invariance << "," << smith_cross << "," << torsor_algebra << ","
                << verdict(report.pass) << "\n";
            break;
    }
    report.body = out.str();
    return report;
}

Report dispatch(const RunConfig& config) {
    switch (config.command) {
        case Command::MirrorTest: return cmd_mirror_test(config);
        case Command::Stringy: return cmd_stringy(config);
        case Command::Twisted: return cmd_twisted(config);
        case Command::Dims: return cmd_dims(config);
        case Command::LemmaSweep: return cmd_lemma_sweep(config);
        case Command::DualitySweep: return cmd_duality_sweep(config);
    }
    throw std::logic_error("unreachable command value");
}

}  // namespace

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const bool randomized =
            config.command == Command::LemmaSweep || config.command == Command::DualitySweep;
        if (randomized && config.output_path && !config.seed)
            throw UsageError("writing a sweep report requires an explicit --seed");
        const Report report = dispatch(config);
        if (config.output_path) {
            std::ofstream file(*config.output_path);
            if (!file)
                throw std::runtime_error("cannot open " + config.output_path->string() +
                                         " for writing");
            file << report.body;
            if (!file)
                throw std::runtime_error("failed writing " + config.output_path->string());
        } else {
            out << report.body;
        }
        return report.pass ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace stringy
