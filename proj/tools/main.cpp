// Command-line front end: tilt sweeps, self-verification, one-period
// evolution demos, Bell/three-spin/monogamy reports. Angles are radians
// unless --degrees is given; machine-readable output via --out csv|json.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "berry/entanglement.hpp"
#include "berry/evolution.hpp"
#include "berry/geometric_phase.hpp"
#include "berry/sweep.hpp"
#include "berry/verify.hpp"

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kAdiabaticDeviationNote = 1e-2;

enum class OutMode { pretty, csv, json_out };

struct CommonOpts {
    std::string out = "pretty";
    std::string output_path;
    bool degrees = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, const std::string& default_out) {
    opts.out = default_out;
    cmd->add_option("--out", opts.out, "output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}))
        ->capture_default_str();
    cmd->add_option("--output-path", opts.output_path, "write output to a file");
    cmd->add_flag("--degrees", opts.degrees, "interpret angle arguments as degrees");
}

double to_radians(double angle, const CommonOpts& opts) {
    return opts.degrees ? angle * kDegToRad : angle;
}

// emits to stdout or --output-path
int emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(opts.output_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << opts.output_path << " for writing\n";
        return 2;
    }
    f << text;
    return 0;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

json cplx_json(berry::cplx z) { return json::array({z.real(), z.imag()}); }

// csv emission only makes sense for sweep rows
bool reject_csv(const CommonOpts& opts, const char* cmd) {
    if (opts.out == "csv") {
        std::cerr << "error: " << cmd << " emits pretty or json output only\n";
        return true;
    }
    return false;
}

berry::cplx parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            return berry::cplx(std::stod(text), 0.0);
        }
        return berry::cplx(std::stod(text.substr(0, comma)),
                           std::stod(text.substr(comma + 1)));
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected 're' or 're,im', got '" + text + "'");
    }
}

int cmd_sweep(const berry::SweepSpec& spec, const CommonOpts& opts) {
    const berry::RunReport report = berry::run_sweep(spec);
    std::ostringstream os;
    if (opts.out == "csv") {
        berry::write_sweep_csv(os, report);
    } else if (opts.out == "json") {
        os << berry::sweep_to_json(spec, report).dump(2) << '\n';
    } else {
        os << "phi sweep: " << spec.points << " points in [" << fmt(spec.phi_min) << ", "
           << fmt(spec.phi_max) << "], " << spec.wilson_samples << " loop samples\n";
        os << "  phi        |b|        gamma_+     gamma_wilson  c_paper    c_wootters\n";
        for (const berry::SweepRow& r : report.rows) {
            char line[160];
            std::snprintf(line, sizeof(line), "  %-10.6f %-10.6f %-11.6f %-13.6f %-10.6f %-10.6f\n",
                          r.phi, r.abs_b, r.gamma_plus, r.gamma_wilson, r.c_paper,
                          r.c_wootters_normalized);
            os << line;
        }
        os << "max_abs_err = " << fmt(report.max_abs_err) << " (tolerance "
           << fmt(spec.tolerance) << ") => " << (report.pass ? "pass" : "FAIL") << '\n';
    }
    const int rc = emit(opts, os.str());
    if (rc != 0) return rc;
    return report.pass ? 0 : 1;
}

int cmd_verify(const berry::VerifyOptions& vopts, const CommonOpts& opts) {
    const auto checks = berry::run_verify(vopts);
    bool all_pass = true;
    std::ostringstream os;
    if (opts.out == "json") {
        json arr = json::array();
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            arr.push_back({{"name", c.name},
                           {"max_err", c.max_err},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
        }
        os << json{{"seed", vopts.seed}, {"checks", arr}, {"pass", all_pass}}.dump(2) << '\n';
    } else {
        os << "seed = " << vopts.seed
           << (vopts.seed == 0 ? " (randomized checks skipped)" : "") << '\n';
        for (const auto& c : checks) {
            all_pass = all_pass && c.pass;
            char line[160];
            std::snprintf(line, sizeof(line), "%-34s %-6s max_err=%-12.3e tol=%.3e\n",
                          c.name.c_str(), c.pass ? "PASS" : "FAIL", c.max_err, c.tolerance);
            os << line;
        }
        os << (all_pass ? "all checks passed" : "CHECK FAILURES PRESENT") << '\n';
    }
    const int rc = emit(opts, os.str());
    if (rc != 0) return rc;
    return all_pass ? 0 : 1;
}

int cmd_evolve(double phi, double ratio, long steps, const CommonOpts& opts) {
    const berry::FieldConfig cfg(phi, 1.0, ratio);
    const berry::PhaseRecord rec = berry::up_branch_phases(cfg, steps);
    const double gamma_closed = berry::closed_form_gamma(phi).plus;
    const double deviation = berry::circular_distance(rec.geometric, gamma_closed);
    const bool adiabatic = deviation <= kAdiabaticDeviationNote;

    std::ostringstream os;
    if (opts.out == "json") {
        os << json{{"phi", phi},
                   {"ratio", ratio},
                   {"steps", steps},
                   {"record",
                    {{"geometric", rec.geometric},
                     {"dynamical", rec.dynamical},
                     {"total", rec.total},
                     {"visibility", rec.visibility}}},
                   {"gamma_plus_closed_form", gamma_closed},
                   {"abs_deviation", deviation},
                   {"adiabatic", adiabatic}}
                  .dump(2)
           << '\n';
    } else {
        os << "one-period evolution of the +branch eigenstate\n";
        os << "  phi = " << fmt(phi) << ", omega_L/omega0 = " << fmt(ratio)
           << ", steps = " << steps << '\n';
        os << "  geometric  = " << fmt(rec.geometric) << '\n';
        os << "  dynamical  = " << fmt(rec.dynamical) << '\n';
        os << "  total      = " << fmt(rec.total) << '\n';
        os << "  visibility = " << fmt(rec.visibility) << '\n';
        os << "  closed form gamma_+ = " << fmt(gamma_closed) << ", deviation = "
           << fmt(deviation) << '\n';
        if (!adiabatic) {
            os << "  note: deviation exceeds " << fmt(kAdiabaticDeviationNote)
               << "; field rotation is not adiabatic at this ratio\n";
        }
    }
    return emit(opts, os.str());
}

int cmd_bell(double gamma_plus, const CommonOpts& opts) {
    const berry::SquareOperator sig = berry::sigma_matrix(gamma_plus);
    const berry::StateVector ep = berry::bell_evolve(berry::BellKind::plus, gamma_plus);
    const berry::StateVector em = berry::bell_evolve(berry::BellKind::minus, gamma_plus);

    std::ostringstream os;
    if (opts.out == "json") {
        os << json{{"gamma_plus", gamma_plus},
                   {"sigma",
                    {cplx_json(sig(0, 0)), cplx_json(sig(0, 1)), cplx_json(sig(1, 0)),
                     cplx_json(sig(1, 1))}},
                   {"evolved_plus", {cplx_json(ep[0]), cplx_json(ep[1]), cplx_json(ep[2]),
                                     cplx_json(ep[3])}},
                   {"evolved_minus", {cplx_json(em[0]), cplx_json(em[1]), cplx_json(em[2]),
                                      cplx_json(em[3])}}}
                  .dump(2)
           << '\n';
    } else {
        auto show = [&](berry::cplx z) {
            std::ostringstream s;
            s << '(' << fmt(z.real()) << (z.imag() < 0 ? "" : "+") << fmt(z.imag()) << "i)";
            return s.str();
        };
        os << "Bell-pair cycle at gamma_+ = " << fmt(gamma_plus) << '\n';
        os << "  Sigma = [" << show(sig(0, 0)) << ' ' << show(sig(0, 1)) << "; "
           << show(sig(1, 0)) << ' ' << show(sig(1, 1)) << "]\n";
        os << "  |psi+> -> " << show(ep[1]) << "|ud> + " << show(ep[2]) << "|du>\n";
        os << "  |psi-> -> " << show(em[1]) << "|ud> + " << show(em[2]) << "|du>\n";
    }
    return emit(opts, os.str());
}

int cmd_three_spin(const std::array<berry::cplx, 3>& amps, double g_ab, double g_bc,
                   double g_ca, double g_a, double g_b, double g_c, const CommonOpts& opts) {
    const berry::ThreeSpinResult res =
        berry::three_spin_phase(amps, g_ab, g_bc, g_ca, g_a, g_b, g_c);
    std::ostringstream os;
    if (opts.out == "json") {
        os << json{{"value", cplx_json(res.value)},
                   {"phase", res.phase},
                   {"visibility", res.visibility}}
                  .dump(2)
           << '\n';
    } else {
        os << "three-spin composed phase\n";
        os << "  value      = " << fmt(res.value.real()) << (res.value.imag() < 0 ? " - " : " + ")
           << fmt(std::abs(res.value.imag())) << "i\n";
        os << "  phase      = " << fmt(res.phase) << '\n';
        os << "  visibility = " << fmt(res.visibility) << '\n';
    }
    return emit(opts, os.str());
}

int cmd_monogamy(double c12, int n, std::optional<double> c1_rest, const CommonOpts& opts) {
    const berry::MonogamyReport rep = berry::monogamy_report(c12, n, c1_rest);
    std::ostringstream os;
    if (opts.out == "json") {
        json j{{"n", rep.n},           {"c12", rep.c12},
               {"bound", rep.bound},   {"lhs", rep.lhs},
               {"critical_c12", rep.critical_c12}, {"satisfied", rep.satisfied}};
        j["c1_rest"] = rep.c1_rest ? json(*rep.c1_rest) : json(nullptr);
        os << j.dump(2) << '\n';
    } else {
        os << "pairwise-entanglement sharing report, n = " << rep.n << '\n';
        os << "  c12 = " << fmt(rep.c12) << ", bound 1/(n-1) = " << fmt(rep.bound) << '\n';
        os << "  (n-1) c12 = " << fmt(rep.lhs);
        if (rep.c1_rest) os << " vs c1_rest = " << fmt(*rep.c1_rest);
        os << '\n';
        os << "  critical c12 = " << fmt(rep.critical_c12) << '\n';
        os << "  satisfied = " << (rep.satisfied ? "true" : "false") << '\n';
    }
    return emit(opts, os.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berry-phase and two-spin concurrence toolkit"};
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "tilt-angle sweep with CSV/JSON emission");
    berry::SweepSpec spec;
    CommonOpts sweep_opts;
    sweep->add_option("--phi-min", spec.phi_min, "lower tilt angle")->capture_default_str();
    sweep->add_option("--phi-max", spec.phi_max, "upper tilt angle")->capture_default_str();
    sweep->add_option("--points", spec.points, "number of sweep points")->capture_default_str();
    sweep->add_option("--wilson-samples", spec.wilson_samples, "loop discretization samples")
        ->capture_default_str();
    sweep->add_option("--ratio", spec.ratio, "omega_L/omega0 echoed into reports")
        ->capture_default_str();
    sweep->add_option("--tolerance", spec.tolerance, "pass threshold on max_abs_err")
        ->capture_default_str();
    add_common(sweep, sweep_opts, "csv");

    // verify
    auto* verify = app.add_subcommand("verify", "run the named cross-module checks");
    CommonOpts verify_opts;
    double verify_tol = -1.0;
    std::uint64_t verify_seed = 12345;
    verify->add_option("--tolerance", verify_tol,
                       "override every per-check tolerance (default: per-check values)");
    verify->add_option("--seed", verify_seed, "randomized-check seed; 0 skips them")
        ->capture_default_str();
    add_common(verify, verify_opts, "pretty");

    // evolve
    auto* evolve = app.add_subcommand("evolve", "one-period evolution phase split");
    CommonOpts evolve_opts;
    double evolve_phi = 0.0;
    double evolve_ratio = 500.0;
    long evolve_steps = 10000;
    evolve->add_option("--phi", evolve_phi, "tilt angle")->required();
    evolve->add_option("--ratio", evolve_ratio, "omega_L/omega0, must be > 1")
        ->capture_default_str();
    evolve->add_option("--steps", evolve_steps, "stepper steps per period")
        ->capture_default_str();
    add_common(evolve, evolve_opts, "pretty");

    // bell
    auto* bell = app.add_subcommand("bell", "Bell-pair cycle at a given gamma_+");
    CommonOpts bell_opts;
    double bell_gamma = 0.0;
    bell->add_option("--gamma-plus", bell_gamma, "cyclic phase of the +branch")->required();
    add_common(bell, bell_opts, "pretty");

    // three-spin
    auto* three = app.add_subcommand("three-spin", "three-party phase composition");
    CommonOpts three_opts;
    std::string a1 = "1", a2 = "0", a3 = "0";
    double g_ab = 0.0, g_bc = 0.0, g_ca = 0.0, g_a = 0.0, g_b = 0.0, g_c = 0.0;
    three->add_option("--a1", a1, "amplitude, 're' or 're,im'")->capture_default_str();
    three->add_option("--a2", a2, "amplitude, 're' or 're,im'")->capture_default_str();
    three->add_option("--a3", a3, "amplitude, 're' or 're,im'")->capture_default_str();
    three->add_option("--gamma-ab", g_ab, "pair phase AB")->capture_default_str();
    three->add_option("--gamma-bc", g_bc, "pair phase BC")->capture_default_str();
    three->add_option("--gamma-ca", g_ca, "pair phase CA")->capture_default_str();
    three->add_option("--gamma-a", g_a, "single phase A")->capture_default_str();
    three->add_option("--gamma-b", g_b, "single phase B")->capture_default_str();
    three->add_option("--gamma-c", g_c, "single phase C")->capture_default_str();
    add_common(three, three_opts, "pretty");

    // monogamy
    auto* mono = app.add_subcommand("monogamy", "shared-entanglement bound report");
    CommonOpts mono_opts;
    double mono_c12 = 0.0;
    int mono_n = 2;
    double mono_c1_rest = -1.0;
    mono->add_option("--c12", mono_c12, "pairwise concurrence")->required();
    mono->add_option("--n", mono_n, "number of spins")->required();
    auto* rest_opt = mono->add_option("--c1-rest", mono_c1_rest, "one-versus-rest concurrence");
    add_common(mono, mono_opts, "pretty");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) {
            if (sweep_opts.degrees) {
                spec.phi_min *= kDegToRad;
                spec.phi_max *= kDegToRad;
            }
            return cmd_sweep(spec, sweep_opts);
        }
        if (verify->parsed()) {
            if (reject_csv(verify_opts, "verify")) return 2;
            berry::VerifyOptions vopts;
            if (verify->count("--tolerance") > 0) {
                if (verify_tol <= 0.0) {
                    std::cerr << "error: --tolerance must be positive\n";
                    return 2;
                }
                vopts.tolerance = verify_tol;
            }
            vopts.seed = verify_seed;
            return cmd_verify(vopts, verify_opts);
        }
        if (evolve->parsed()) {
            if (reject_csv(evolve_opts, "evolve")) return 2;
            const double phi = to_radians(evolve_phi, evolve_opts);
            if (!(evolve_ratio > 1.0)) {
                std::cerr << "error: --ratio must be > 1 (rotation slower than precession)\n";
                return 2;
            }
            return cmd_evolve(phi, evolve_ratio, evolve_steps, evolve_opts);
        }
        if (bell->parsed()) {
            if (reject_csv(bell_opts, "bell")) return 2;
            return cmd_bell(to_radians(bell_gamma, bell_opts), bell_opts);
        }
        if (three->parsed()) {
            if (reject_csv(three_opts, "three-spin")) return 2;
            const std::array<berry::cplx, 3> amps{parse_complex(a1), parse_complex(a2),
                                                  parse_complex(a3)};
            return cmd_three_spin(amps, to_radians(g_ab, three_opts),
                                  to_radians(g_bc, three_opts), to_radians(g_ca, three_opts),
                                  to_radians(g_a, three_opts), to_radians(g_b, three_opts),
                                  to_radians(g_c, three_opts), three_opts);
        }
        if (mono->parsed()) {
            if (reject_csv(mono_opts, "monogamy")) return 2;
            const bool has_rest = rest_opt->count() > 0;
            return cmd_monogamy(mono_c12, mono_n,
                                has_rest ? std::optional<double>(mono_c1_rest)
                                         : std::nullopt,
                                mono_opts);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const berry::ZeroVisibility& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const berry::DegeneratePath& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const berry::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
