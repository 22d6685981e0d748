#include "wclab/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "wclab/geometry.hpp"
#include "wclab/saddle.hpp"
#include "wclab/special_functions.hpp"
#include "wclab/turaev_viro.hpp"

namespace wclab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kVersion = "0.1.0";

std::string format_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

const char* command_name(Command c) {
    switch (c) {
        case Command::Jones: return "jones";
        case Command::Potential: return "potential";
        case Command::Solve: return "solve";
        case Command::Volume: return "volume";
        case Command::Tv: return "tv";
        case Command::Asymptote: return "asymptote";
        case Command::Audit: return "audit";
        case Command::Check: return "check";
    }
    return "unknown";
}

// Row-oriented table with fixed column order; CSV bodies are
// byte-deterministic for a fixed config.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(const std::vector<std::string>& row) { rows.push_back(row); }

    void write_csv(std::ostream& os) const {
        for (size_t i = 0; i < columns.size(); ++i)
            os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
        for (const auto& row : rows)
            for (size_t i = 0; i < row.size(); ++i)
                os << row[i] << (i + 1 < row.size() ? "," : "\n");
    }

    void write_json(std::ostream& os) const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj;
            for (size_t i = 0; i < columns.size() && i < row.size(); ++i) obj[columns[i]] = row[i];
            arr.push_back(obj);
        }
        os << arr.dump(2) << "\n";
    }
};

double scaled_log(double log_abs, double half_level) { return 2.0 * kPi * log_abs / half_level; }

int color_for_ratio(double s, int N) {
    const int m = static_cast<int>(std::lround(s * (N + 0.5)));
    return std::max(1, std::min(N, m));
}

uint64_t splitmix(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double uniform01(uint64_t& state) { return static_cast<double>(splitmix(state) >> 11) * 0x1.0p-53; }

struct CheckOutcome {
    std::string name;
    bool pass;
    double worst;
};

std::vector<CheckOutcome> run_invariant_suite(uint64_t seed);

}  // namespace

std::string default_output_dir() {
    if (const char* dir = std::getenv("WCLAB_OUTPUT_DIR")) return dir;
    return ".";
}

namespace {

int run_impl(const RunConfig& config, Table& table, nlohmann::json& extra, int& numeric_status) {
    const ChainSpec spec = config.whitehead ? ChainSpec{0, 1, 0} : config.spec;

    switch (config.command) {
        case Command::Jones: {
            if (config.orders.empty()) throw std::invalid_argument("jones: no N values given");
            if (config.belt_colors.empty() || config.clasp_colors.empty())
                throw std::invalid_argument("jones: color ranges must be nonempty");
            table.columns = {"N", "r", "M1", "M2", "re_J", "im_J", "log_abs_J", "growth_estimate"};
            for (int N : config.orders) {
                const RootData root = RootData::from_order(N);
                for (int M2 : config.clasp_colors) {
                    for (int M1 : config.belt_colors) {
                        const Coloring coloring{M1, M2};
                        const cplx j = config.whitehead
                                           ? jones_whitehead(coloring, root, config.precision)
                                           : jones_chain(spec, coloring, root, config.precision);
                        const double la = std::log(std::abs(j));
                        table.add_row({std::to_string(N), std::to_string(root.r),
                                       std::to_string(M1), std::to_string(M2),
                                       format_g17(j.real()), format_g17(j.imag()), format_g17(la),
                                       format_g17(scaled_log(la, root.half_level))});
                    }
                }
            }
            return 0;
        }

        case Command::Asymptote: {
            if (config.orders.size() < 4)
                throw std::invalid_argument("asymptote: need at least 4 N values");
            table.columns = {"N", "r", "M1", "M2", "re_J", "im_J", "log_abs_J", "growth_estimate"};
            std::vector<std::pair<double, double>> samples;
            for (int N : config.orders) {
                const RootData root = RootData::from_order(N);
                const Coloring coloring{color_for_ratio(config.s1, N), color_for_ratio(config.s2, N)};
                const cplx j = config.whitehead
                                   ? jones_whitehead(coloring, root, config.precision)
                                   : jones_chain(spec, coloring, root, config.precision);
                const double la = std::log(std::abs(j));
                samples.emplace_back(static_cast<double>(N), la);
                table.add_row({std::to_string(N), std::to_string(root.r),
                               std::to_string(coloring.belt_color),
                               std::to_string(coloring.clasp_color), format_g17(j.real()),
                               format_g17(j.imag()), format_g17(la),
                               format_g17(scaled_log(la, root.half_level))});
            }
            const GrowthFit fit = growth_rate(samples);
            extra["fit"] = {{"alpha", fit.alpha},
                            {"beta", fit.beta},
                            {"gamma", fit.gamma},
                            {"residual", fit.residual},
                            {"volume_estimate", fit.volume_estimate()}};
            std::cout << "asymptote: 2*pi*alpha = " << format_g17(fit.volume_estimate())
                      << ", beta = " << format_g17(fit.beta) << "\n";
            return 0;
        }

        case Command::Potential: {
            PotentialParams params = PotentialParams::chain(config.sign, config.s1, config.s2, spec);
            Zvec z = default_seed(params);
            if (config.z0) {
                if (config.z0->size() != static_cast<size_t>(2 * params.dimension()))
                    throw std::invalid_argument("potential: z needs re,im per coordinate");
                for (int k = 0; k < params.dimension(); ++k)
                    z[k] = cplx((*config.z0)[2 * k], (*config.z0)[2 * k + 1]);
            }
            const cplx value = chain_potential(params, z);
            const Zvec grad = chain_gradient(params, z);
            const cplx det = determinant(chain_hessian(params, z));
            table.columns = {"re_phi", "im_phi", "grad_norm", "re_det_hess", "im_det_hess"};
            double gn = 0;
            for (const cplx& g : grad) gn += std::norm(g);
            table.add_row({format_g17(value.real()), format_g17(value.imag()),
                           format_g17(std::sqrt(gn)), format_g17(det.real()),
                           format_g17(det.imag())});
            return 0;
        }

        case Command::Solve: {
            PotentialParams params = PotentialParams::chain(config.sign, 1.0, 1.0, spec);
            const ContinuationPath path =
                continue_path(params, config.s1, config.s2, config.continuation_steps);
            if (!path.reached_target) {
                std::cerr << "solve: continuation stalled: " << path.failure_reason << "\n";
                numeric_status = 1;
            }
            table.columns = {"s1", "s2", "residual", "volume", "cs_part", "re_det_hess",
                             "im_det_hess"};
            for (int k = 0; k < params.dimension(); ++k) {
                table.columns.push_back("re_z" + std::to_string(k + 1));
                table.columns.push_back("im_z" + std::to_string(k + 1));
            }
            for (const Waypoint& wp : path.waypoints) {
                std::vector<std::string> row = {
                    format_g17(wp.s1.real()),
                    format_g17(wp.s2.real()),
                    format_g17(wp.result.residual_norm),
                    format_g17(wp.result.volume),
                    format_g17(wp.result.cs_part),
                    format_g17(wp.result.hess_det.real()),
                    format_g17(wp.result.hess_det.imag()),
                };
                for (const cplx& zk : wp.result.z_star) {
                    row.push_back(format_g17(zk.real()));
                    row.push_back(format_g17(zk.imag()));
                }
                table.add_row(row);
            }
            return 0;
        }

        case Command::Volume: {
            PotentialParams params = PotentialParams::chain(config.sign, 1.0, 1.0, spec);
            const ContinuationPath path =
                continue_path(params, config.s1, config.s2, config.continuation_steps);
            if (!path.reached_target) {
                std::cerr << "volume: continuation stalled: " << path.failure_reason << "\n";
                numeric_status = 1;
            }
            const CriticalPointResult& res = path.final_result();
            params.s1 = config.s1;
            params.s2 = config.s2;
            const double v = bloch_wigner_volume(params, res.z_star);
            const double dr = differential_residual(params, res.z_star);
            const GluingReport report = gluing_residuals(shapes_from_coordinates(params, res.z_star));
            const cplx B1 = std::exp(cplx(0, 2 * kPi) * params.s1);
            const cplx B2 = std::exp(cplx(0, 2 * kPi) * params.s2);
            table.columns = {"s1",          "s2",           "volume_2pi_re_phi", "volume_bw",
                             "diff_resid",  "max_edge",     "meridian_gap",      "longitude_gap"};
            table.add_row({format_g17(config.s1), format_g17(config.s2), format_g17(res.volume),
                           format_g17(v), format_g17(dr),
                           format_g17(report.max_edge_residual()),
                           format_g17(std::abs(report.meridian_m1 - B1)),
                           format_g17(std::abs(report.longitude_l2 - B2 * B2))});
            return 0;
        }

        case Command::Tv: {
            if (config.levels.empty()) throw std::invalid_argument("tv: no r values given");
            table.columns = {"r", "value", "log_scaled"};
            std::vector<int> usable;
            for (int r : config.levels) {
                const TVResult tv = spec.components() == 2 ? tv_from_jones(spec, r)
                                                           : tv_equal_clasp_subsum(spec, r);
                usable.push_back(r);
                table.add_row({std::to_string(r), format_g17(tv.value), format_g17(tv.log_scaled)});
            }
            if (usable.size() >= 4) {
                const TVGrowth g = tv_growth(spec, usable);
                extra["fit"] = {{"alpha", g.fit.alpha},
                                {"beta", g.fit.beta},
                                {"gamma", g.fit.gamma},
                                {"volume_estimate", g.volume_estimate}};
                std::cout << "tv: volume estimate = " << format_g17(g.volume_estimate) << "\n";
            }
            return 0;
        }

        case Command::Audit: {
            if (config.levels.empty()) throw std::invalid_argument("audit: no r values given");
            table.columns = {"r", "max_M1", "max_M2", "max_term", "bound", "margin",
                             "fitted_margin_constant", "all_bounded"};
            for (int r : config.levels) {
                const AuditReport rep = upper_bound_audit(spec, r);
                table.add_row({std::to_string(r), std::to_string(rep.max_M1),
                               std::to_string(rep.max_M2), format_g17(rep.max_term),
                               format_g17(rep.bound), format_g17(rep.margin),
                               format_g17(rep.fitted_margin_constant),
                               rep.all_bounded ? "1" : "0"});
                if (!rep.all_bounded) numeric_status = 1;
            }
            return 0;
        }

        case Command::Check: {
            const auto outcomes = run_invariant_suite(config.seed);
            table.columns = {"property", "pass", "worst"};
            bool all = true;
            for (const CheckOutcome& c : outcomes) {
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (worst " << c.worst
                          << ")\n";
                table.add_row({c.name, c.pass ? "1" : "0", format_g17(c.worst)});
                all = all && c.pass;
            }
            if (!all) numeric_status = 1;
            return 0;
        }
    }
    throw std::invalid_argument("unknown command");
}

std::vector<CheckOutcome> run_invariant_suite(uint64_t seed) {
    std::vector<CheckOutcome> out;
    uint64_t state = seed;

    // Lobachevsky oddness and pi-periodicity.
    {
        double worst = 0;
        for (int k = 0; k < 64; ++k) {
            const double theta = (uniform01(state) - 0.5) * 20.0;
            worst = std::max(worst, std::abs(lobachevsky(-theta) + lobachevsky(theta)));
            worst = std::max(worst, std::abs(lobachevsky(theta + kPi) - lobachevsky(theta)));
        }
        out.push_back({"lobachevsky_odd_periodic", worst <= 1e-13, worst});
    }

    // D(e^{2 i theta}) = 2 Lambda(theta) on (0, pi).
    {
        double worst = 0;
        for (int k = 1; k < 64; ++k) {
            const double theta = kPi * k / 64.0;
            const double d = bloch_wigner(std::polar(1.0, 2.0 * theta));
            worst = std::max(worst, std::abs(d - 2.0 * lobachevsky(theta)));
        }
        out.push_back({"bloch_wigner_matches_lobachevsky", worst <= 1e-12, worst});
    }

    // D(1/z) = -D(z), D(conj z) = -D(z).
    {
        double worst = 0;
        for (int k = 0; k < 64; ++k) {
            const cplx z(uniform01(state) * 4.0 - 2.0, uniform01(state) * 4.0 - 2.0);
            if (std::abs(z) < 0.1 || std::abs(z - 1.0) < 0.1 || std::abs(z.imag()) < 1e-3) continue;
            worst = std::max(worst, std::abs(bloch_wigner(1.0 / z) + bloch_wigner(z)));
            worst = std::max(worst, std::abs(bloch_wigner(std::conj(z)) + bloch_wigner(z)));
        }
        out.push_back({"bloch_wigner_symmetries", worst <= 1e-12, worst});
    }

    // Whitehead gradient against central differences at random domain points.
    {
        double worst = 0;
        const double h = 1e-5;
        for (int k = 0; k < 50; ++k) {
            const double s1 = 0.9 + 0.1 * uniform01(state);
            const double s2 = 0.9 + 0.1 * uniform01(state);
            const PotentialParams p = PotentialParams::whitehead(Sign::Plus, s1, s2);
            const cplx z1(0.35 + 0.3 * uniform01(state), 0.1 * (uniform01(state) - 0.5));
            const cplx z2(0.15 + 0.2 * uniform01(state), 0.1 * (uniform01(state) - 0.5));
            const auto g = whitehead_gradient(p, z1, z2);
            const cplx fd1 =
                (whitehead_potential(p, z1 + h, z2) - whitehead_potential(p, z1 - h, z2)) /
                (2.0 * h);
            const cplx fd2 =
                (whitehead_potential(p, z1, z2 + h) - whitehead_potential(p, z1, z2 - h)) /
                (2.0 * h);
            worst = std::max(worst, std::abs(g[0] - fd1) / std::max(1.0, std::abs(g[0])));
            worst = std::max(worst, std::abs(g[1] - fd2) / std::max(1.0, std::abs(g[1])));
        }
        out.push_back({"whitehead_gradient_vs_finite_differences", worst <= 1e-7, worst});
    }

    // Chain potential with (a,c,d) = (0,1,0) reproduces the Whitehead one.
    {
        double worst = 0;
        for (int k = 0; k < 32; ++k) {
            const double s1 = 0.9 + 0.1 * uniform01(state);
            const double s2 = 0.9 + 0.1 * uniform01(state);
            const PotentialParams p = PotentialParams::whitehead(Sign::Plus, s1, s2);
            const cplx z1(0.35 + 0.3 * uniform01(state), 0.05 * (uniform01(state) - 0.5));
            const cplx z2(0.15 + 0.2 * uniform01(state), 0.05 * (uniform01(state) - 0.5));
            worst = std::max(worst, std::abs(chain_potential(p, {z1, z2}) -
                                             whitehead_potential(p, z1, z2)));
        }
        out.push_back({"chain_block_reduces_to_whitehead", worst <= 1e-13, worst});
    }

    // Differential formula residual at random interior points.
    {
        double worst = 0;
        for (int k = 0; k < 100; ++k) {
            const double s1 = 0.9 + 0.1 * uniform01(state);
            const double s2 = 0.9 + 0.1 * uniform01(state);
            const PotentialParams p = PotentialParams::whitehead(Sign::Plus, s1, s2);
            const Zvec z = {cplx(0.35 + 0.3 * uniform01(state), 0.1 * (uniform01(state) - 0.5)),
                            cplx(0.15 + 0.2 * uniform01(state), 0.1 * (uniform01(state) - 0.5))};
            worst = std::max(worst, differential_residual(p, z));
        }
        out.push_back({"differential_formula", worst <= 1e-9, worst});
    }

    // Critical point, gluing equations and volume agreement at s = (1,1)
    // and at a deformed target.
    {
        double worst = 0;
        const PotentialParams p = PotentialParams::whitehead(Sign::Plus, 1.0, 1.0);
        for (const auto& target : std::vector<std::pair<double, double>>{{1.0, 1.0}, {0.95, 0.97}}) {
            const ContinuationPath path = continue_path(p, target.first, target.second, 8);
            if (!path.reached_target) {
                worst = 1e30;
                break;
            }
            PotentialParams q = p;
            q.s1 = target.first;
            q.s2 = target.second;
            const CriticalPointResult& res = path.final_result();
            const GluingReport rep = gluing_residuals(shapes_from_coordinates(q, res.z_star));
            const cplx B1 = std::exp(cplx(0, 2 * kPi) * q.s1);
            const cplx B2 = std::exp(cplx(0, 2 * kPi) * q.s2);
            worst = std::max(worst, rep.max_edge_residual());
            worst = std::max(worst, std::abs(rep.meridian_m1 - B1));
            worst = std::max(worst, std::abs(rep.longitude_l2 - B2 * B2));
            worst = std::max(worst,
                             std::abs(res.volume - bloch_wigner_volume(q, res.z_star)));
        }
        out.push_back({"gluing_and_volume_at_critical_points", worst <= 1e-10, worst});
    }

    // Plus/minus agreement and evenness of the volume.
    {
        double worst = 0;
        const PotentialParams p = PotentialParams::whitehead(Sign::Plus, 1.0, 1.0);
        worst = std::max(worst, plus_minus_agreement(p, 0.96, 0.98));
        worst = std::max(worst, evenness_gap(p, 0.97, 1.0));
        out.push_back({"plus_minus_and_evenness", worst <= 1e-9, worst});
    }

    return out;
}

}  // namespace

int run(const RunConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    Table table;
    nlohmann::json extra;
    int numeric_status = 0;

    std::string path = config.output_path;
    if (path.empty())
        path = default_output_dir() + "/" + command_name(config.command) +
               (config.format == OutputFormat::Csv ? ".csv" : ".json");

    try {
        run_impl(config, table, extra, numeric_status);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 1;
    }

    {
        std::ofstream os(path);
        if (!os) {
            std::cerr << "config error: cannot open output path " << path << "\n";
            return 2;
        }
        if (config.format == OutputFormat::Csv)
            table.write_csv(os);
        else
            table.write_json(os);
    }

    const auto t1 = std::chrono::steady_clock::now();
    nlohmann::json meta;
    meta["command"] = command_name(config.command);
    meta["version"] = kVersion;
    meta["precision"] = config.precision == Precision::Double ? "double" : "extended";
    meta["seed"] = config.seed;
    meta["format"] = config.format == OutputFormat::Csv ? "csv" : "json";
    meta["output"] = path;
    meta["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    meta["config"] = {{"whitehead", config.whitehead},
                      {"full_twists", config.spec.full_twists},
                      {"clasps", config.spec.clasps},
                      {"mirror_clasps", config.spec.mirror_clasps},
                      {"belt_colors", config.belt_colors},
                      {"clasp_colors", config.clasp_colors},
                      {"orders", config.orders},
                      {"levels", config.levels},
                      {"s1", config.s1},
                      {"s2", config.s2},
                      {"sign", config.sign == Sign::Plus ? "+" : "-"},
                      {"continuation_steps", config.continuation_steps}};
    meta["tolerances"] = {{"solver", 1e-12}, {"quadrature", 1e-11}, {"degeneracy_floor", 1e-6}};
    if (!extra.empty()) meta["results"] = extra;

    std::ofstream ms(path + ".meta.json");
    if (ms) ms << meta.dump(2) << "\n";

    return numeric_status;
}

}  // namespace wclab
