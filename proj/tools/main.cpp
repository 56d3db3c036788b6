#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stringy/cli.hpp"

namespace {

struct Flags {
    std::optional<std::int64_t> g, n, m, c, d, k, count;
    std::optional<std::uint64_t> seed;
    std::string in, out;
    std::string format = "text";
};

void add_common_options(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--g", flags.g, "genus of the base curve");
    cmd->add_option("--n", flags.n, "rank (group modulus)");
    cmd->add_option("--m", flags.m, "number of punctures");
    cmd->add_option("--c", flags.c, "degree / discrete-torsion multiplier");
    cmd->add_option("--d", flags.d, "mirror-side degree");
    cmd->add_option("--k", flags.k, "quaternionic or torus dimension");
    cmd->add_option("--count", flags.count, "sweep iteration count (default 100)");
    cmd->add_option("--seed", flags.seed, "random seed (default 0; required with --out)");
    cmd->add_option("--in", flags.in, "input JSON file");
    cmd->add_option("--out", flags.out, "write the report here instead of stdout");
    cmd->add_option("--format", flags.format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stringy E-polynomials, mirror-pair sector data and dual torus checks"};
    app.require_subcommand(1);

    Flags flags;
    const struct {
        const char* name;
        const char* help;
    } commands[] = {
        {"mirror-test", "check the rank-2 sector aggregation against the closed form (--g --m)"},
        {"stringy", "stringy E-polynomial of a presentation (--in, or --n --g --m to generate)"},
        {"twisted", "discrete-torsion twisted E-polynomial (--in or --n --g --m; --c)"},
        {"dims", "moduli, Hitchin base, spectral genus and Prym dimensions (--n --g --m)"},
        {"lemma-sweep", "random holomorphic-Lagrangian subspaces vs the special-Lagrangian "
                        "condition (--k [--count --seed])"},
        {"duality-sweep", "random polarized lattices: double dual, divisors, torsor algebra "
                          "([--k --count --seed])"},
    };
    for (const auto& command : commands)
        add_common_options(app.add_subcommand(command.name, command.help), flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    stringy::RunConfig config;
    for (const CLI::App* sub : app.get_subcommands())
        config.command = stringy::command_from_string(sub->get_name());
    const std::pair<const char*, std::optional<std::int64_t>&> params[] = {
        {"g", flags.g}, {"n", flags.n}, {"m", flags.m},         {"c", flags.c},
        {"d", flags.d}, {"k", flags.k}, {"count", flags.count},
    };
    for (const auto& [key, value] : params)
        if (value) config.params[key] = *value;
    config.seed = flags.seed;
    if (!flags.in.empty()) config.input_path = flags.in;
    if (!flags.out.empty()) config.output_path = flags.out;
    config.format = stringy::format_from_string(flags.format);

    return stringy::run_command(config, std::cout, std::cerr);
}
