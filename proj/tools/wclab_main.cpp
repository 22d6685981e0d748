#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wclab/runner.hpp"

namespace {

void add_common(CLI::App* sub, wclab::RunConfig& config, std::string& format,
                std::string& precision) {
    sub->add_option("--out", config.output_path, "output file (default: per-command name)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--precision", precision, "double or extended")
        ->check(CLI::IsMember({"double", "extended"}));
    sub->add_option("--seed", config.seed, "seed for randomized identity checks");
}

void add_link(CLI::App* sub, wclab::RunConfig& config, std::string& link) {
    sub->add_option("--link", link, "wl or chain")->check(CLI::IsMember({"wl", "chain"}));
    sub->add_option("-a,--twists", config.spec.full_twists, "full twists");
    sub->add_option("-c,--clasps", config.spec.clasps, "clasps");
    sub->add_option("-d,--mirror-clasps", config.spec.mirror_clasps, "mirror clasps");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Whitehead-chain quantum invariant laboratory"};
    app.require_subcommand(1);

    wclab::RunConfig config;
    std::string link = "wl";
    std::string format = "csv";
    std::string precision = "double";
    std::string sign = "+";
    std::vector<double> zflat;

    auto* jones = app.add_subcommand("jones", "evaluate colored Jones polynomials");
    add_common(jones, config, format, precision);
    add_link(jones, config, link);
    jones->add_option("--M1", config.belt_colors, "belt colors")->required();
    jones->add_option("--M2", config.clasp_colors, "clasp colors")->required();
    jones->add_option("--N", config.orders, "orders N")->required();

    auto* asym = app.add_subcommand("asymptote", "growth-rate fit over N");
    add_common(asym, config, format, precision);
    add_link(asym, config, link);
    asym->add_option("--N", config.orders, "orders N (>= 4)")->required();
    asym->add_option("--s1", config.s1, "belt limiting ratio");
    asym->add_option("--s2", config.s2, "clasp limiting ratio");

    auto* potential = app.add_subcommand("potential", "evaluate the potential at a point");
    add_common(potential, config, format, precision);
    add_link(potential, config, link);
    potential->add_option("--s1", config.s1, "s1");
    potential->add_option("--s2", config.s2, "s2");
    potential->add_option("--sign", sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
    potential->add_option("--z", zflat, "coordinates, interleaved re im per entry");

    auto* solve = app.add_subcommand("solve", "locate the critical point by continuation");
    add_common(solve, config, format, precision);
    add_link(solve, config, link);
    solve->add_option("--s1", config.s1, "target s1");
    solve->add_option("--s2", config.s2, "target s2");
    solve->add_option("--sign", sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
    solve->add_option("--steps", config.continuation_steps, "continuation steps");

    auto* volume = app.add_subcommand("volume", "volumes and gluing residuals at the critical point");
    add_common(volume, config, format, precision);
    add_link(volume, config, link);
    volume->add_option("--s1", config.s1, "target s1");
    volume->add_option("--s2", config.s2, "target s2");
    volume->add_option("--sign", sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
    volume->add_option("--steps", config.continuation_steps, "continuation steps");

    auto* tv = app.add_subcommand("tv", "Turaev-Viro invariants from the color sum");
    add_common(tv, config, format, precision);
    add_link(tv, config, link);
    tv->add_option("--r", config.levels, "odd levels r")->required();

    auto* audit = app.add_subcommand("audit", "per-color upper-bound audit");
    add_common(audit, config, format, precision);
    add_link(audit, config, link);
    audit->add_option("--r", config.levels, "odd levels r")->required();

    auto* check = app.add_subcommand("check", "run the invariant suite");
    add_common(check, config, format, precision);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (jones->parsed()) config.command = wclab::Command::Jones;
    if (asym->parsed()) config.command = wclab::Command::Asymptote;
    if (potential->parsed()) config.command = wclab::Command::Potential;
    if (solve->parsed()) config.command = wclab::Command::Solve;
    if (volume->parsed()) config.command = wclab::Command::Volume;
    if (tv->parsed()) config.command = wclab::Command::Tv;
    if (audit->parsed()) config.command = wclab::Command::Audit;
    if (check->parsed()) config.command = wclab::Command::Check;

    config.whitehead = (link == "wl");
    config.format = (format == "json") ? wclab::OutputFormat::Json : wclab::OutputFormat::Csv;
    config.precision =
        (precision == "extended") ? wclab::Precision::Extended : wclab::Precision::Double;
    config.sign = (sign == "-") ? wclab::Sign::Minus : wclab::Sign::Plus;
    if (!zflat.empty()) config.z0 = zflat;

    return wclab::run(config);
}
