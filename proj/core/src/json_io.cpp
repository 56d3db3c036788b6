#include "stringy/json_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stringy {

namespace {

Int int_from_json(const Json& json) {
    if (json.is_string()) return Int(json.get<std::string>());
    if (json.is_number_integer()) return Int(json.get<std::int64_t>());
    if (json.is_number_unsigned()) return Int(json.get<std::uint64_t>());
    throw std::invalid_argument("expected an integer or a decimal string, got " +
                                std::string(json.type_name()));
}

std::int64_t to_int64(const Int& value) {
    if (value < std::numeric_limits<std::int64_t>::min() ||
        value > std::numeric_limits<std::int64_t>::max())
        throw std::out_of_range("integer " + value.str() + " does not fit in 64 bits");
    return value.convert_to<std::int64_t>();
}

Rat rat_from_json(const Json& json) {
    if (json.is_string()) return Rat(json.get<std::string>());
    if (json.is_number_integer()) return Rat(json.get<std::int64_t>());
    if (json.is_number_unsigned()) return Rat(json.get<std::uint64_t>());
    throw std::invalid_argument("expected a rational string \"p/q\", got " +
                                std::string(json.type_name()));
}

}  // namespace

Json epoly_to_json(const EPolynomial& poly) {
    Json out = Json::array();
    for (const auto& [key, coeff] : poly.terms())
        out.push_back(Json::array({key.first, key.second, coeff.str()}));
    return out;
}

EPolynomial epoly_from_json(const Json& json) {
    if (!json.is_array()) throw std::invalid_argument("epoly must be an array of [p, q, coeff]");
    EPolynomial poly = EPolynomial::zero();
    for (const Json& entry : json) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("epoly term must be a [p, q, coeff] triple");
        poly += EPolynomial::term(entry.at(0).get<int>(), entry.at(1).get<int>(),
                                  int_from_json(entry.at(2)));
    }
    return poly;
}

Json presentation_to_json(const OrbifoldPresentation& presentation) {
    Json out;
    out["n"] = presentation.group().modulus;
    out["g"] = presentation.group().genus;
    Json sectors = Json::array();
    for (const Sector& sector : presentation.sectors()) {
        Json entry;
        entry["gamma"] = sector.gamma.coords();
        entry["shift"] = sector.shift;
        Json isotypic = Json::array();
        for (const auto& [character, poly] : sector.isotypic) {
            Json piece;
            piece["character"] = character.coords();
            piece["epoly"] = epoly_to_json(poly);
            isotypic.push_back(std::move(piece));
        }
        entry["isotypic"] = std::move(isotypic);
        sectors.push_back(std::move(entry));
    }
    out["sectors"] = std::move(sectors);
    return out;
}

OrbifoldPresentation presentation_from_json(const Json& json) {
    const GammaGroup group(json.at("n").get<std::int64_t>(), json.at("g").get<int>());
    std::vector<Sector> sectors;
    for (const Json& entry : json.at("sectors")) {
        GammaElement gamma(group, entry.at("gamma").get<std::vector<std::int64_t>>());
        std::map<GammaCharacter, EPolynomial> isotypic;
        for (const Json& piece : entry.at("isotypic")) {
            GammaCharacter character(group,
                                     piece.at("character").get<std::vector<std::int64_t>>());
            if (!isotypic.emplace(std::move(character), epoly_from_json(piece.at("epoly")))
                     .second)
                throw std::invalid_argument("duplicate isotypic character in sector");
        }
        sectors.emplace_back(std::move(gamma), entry.at("shift").get<int>(),
                             std::move(isotypic));
    }
    return OrbifoldPresentation(group, std::move(sectors));
}

Json curve_setup_to_json(const CurveSetup& setup) {
    Json out;
    out["g"] = setup.genus;
    out["n"] = setup.rank;
    out["m"] = setup.punctures;
    out["c"] = setup.sl_degree;
    out["d"] = setup.mirror_degree;
    out["generic_weights"] = setup.generic_weights;
    out["coprime_case"] = setup.coprime_case;
    return out;
}

CurveSetup curve_setup_from_json(const Json& json) {
    return CurveSetup(json.at("g").get<int>(), json.at("n").get<int>(), json.at("m").get<int>(),
                      json.at("c").get<std::int64_t>(), json.at("d").get<std::int64_t>(),
                      json.at("generic_weights").get<bool>(),
                      json.at("coprime_case").get<bool>());
}

Json lattice_to_json(const PolarizedLatticeTorus& torus) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < torus.pairing().rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < torus.pairing().cols(); ++j)
            row.push_back(to_int64(torus.pairing()(i, j)));
        rows.push_back(std::move(row));
    }
    Json out;
    out["pairing"] = std::move(rows);
    return out;
}

PolarizedLatticeTorus lattice_from_json(const Json& json) {
    const Json& rows = json.at("pairing");
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("pairing must be a nonempty matrix");
    IntMatrix pairing(rows.size(), rows.at(0).size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Json& row = rows.at(i);
        if (!row.is_array() || row.size() != pairing.cols())
            throw std::invalid_argument("pairing rows have mixed lengths");
        for (std::size_t j = 0; j < row.size(); ++j) pairing(i, j) = int_from_json(row.at(j));
    }
    return PolarizedLatticeTorus(std::move(pairing));
}

Json torsor_to_json(const TorsorLabel& label) {
    Json out;
    out["side"] = to_string(label.side);
    out["degree"] = label.degree;
    out["base"] = lattice_to_json(label.base);
    out["has_lagrangian_section"] = label.has_lagrangian_section;
    return out;
}

TorsorLabel torsor_from_json(const Json& json) {
    return TorsorLabel(lattice_from_json(json.at("base")),
                       json.at("degree").get<std::int64_t>(),
                       fiber_side_from_string(json.at("side").get<std::string>()));
}

Json rat_matrix_to_json(const RatMatrix& matrix) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < matrix.cols(); ++j) row.push_back(matrix(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix rat_matrix_from_json(const Json& json) {
    if (!json.is_array() || json.empty())
        throw std::invalid_argument("rational matrix must be a nonempty array of rows");
    RatMatrix matrix(json.size(), json.at(0).size());
    for (std::size_t i = 0; i < json.size(); ++i) {
        const Json& row = json.at(i);
        if (!row.is_array() || row.size() != matrix.cols())
            throw std::invalid_argument("rational matrix rows have mixed lengths");
        for (std::size_t j = 0; j < row.size(); ++j) matrix(i, j) = rat_from_json(row.at(j));
    }
    return matrix;
}

Json model_to_json(const HyperkahlerModel& model) {
    Json out;
    out["k"] = model.k();
    out["j1"] = rat_matrix_to_json(model.complex_structure(1));
    out["j2"] = rat_matrix_to_json(model.complex_structure(2));
    out["j3"] = rat_matrix_to_json(model.complex_structure(3));
    out["metric"] = rat_matrix_to_json(model.metric());
    return out;
}

HyperkahlerModel model_from_json(const Json& json) {
    return HyperkahlerModel(json.at("k").get<int>(), rat_matrix_from_json(json.at("j1")),
                            rat_matrix_from_json(json.at("j2")),
                            rat_matrix_from_json(json.at("j3")),
                            rat_matrix_from_json(json.at("metric")));
}

Json subspace_to_json(const LinearSubspace& subspace) {
    Json out;
    out["basis"] = rat_matrix_to_json(subspace.basis());
    return out;
}

LinearSubspace subspace_from_json(const Json& json) {
    return LinearSubspace(rat_matrix_from_json(json.at("basis")));
}

std::string dump_json(const Json& json) { return json.dump(2) + "\n"; }

Json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return Json::parse(in);  // parse errors carry byte offsets
}

void write_json_file(const std::filesystem::path& path, const Json& json) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << dump_json(json);
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace stringy
