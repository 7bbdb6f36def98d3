#include "berry/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "berry/entanglement.hpp"
#include "berry/geometric_phase.hpp"
#include "berry/spin_system.hpp"

namespace berry {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

void validate(const SweepSpec& spec) {
    if (!std::isfinite(spec.phi_min) || !std::isfinite(spec.phi_max) ||
        spec.phi_min < 0.0 || spec.phi_max > std::numbers::pi ||
        !(spec.phi_min < spec.phi_max)) {
        throw DomainError("SweepSpec: need 0 <= phi_min < phi_max <= pi");
    }
    if (spec.points < 2) throw DomainError("SweepSpec: points must be >= 2");
    if (spec.wilson_samples < 16) throw DomainError("SweepSpec: wilson_samples must be >= 16");
    if (!std::isfinite(spec.ratio) || spec.ratio <= 0.0) {
        throw DomainError("SweepSpec: ratio must be positive");
    }
    if (!std::isfinite(spec.tolerance) || spec.tolerance <= 0.0) {
        throw DomainError("SweepSpec: tolerance must be positive");
    }
}

RunReport run_sweep(const SweepSpec& spec) {
    validate(spec);
    RunReport report;
    report.rows.reserve(spec.points);
    for (int i = 0; i < spec.points; ++i) {
        // endpoints pinned so roundoff cannot push phi outside [phi_min, phi_max]
        const double phi =
            (i == spec.points - 1)
                ? spec.phi_max
                : spec.phi_min + (spec.phi_max - spec.phi_min) * i / (spec.points - 1);

        const BerryFactor bf = berry_factor(phi);
        const GammaPair g = closed_form_gamma(phi);
        const FieldConfig cfg(phi, 1.0, spec.ratio);
        const double gw = wilson_loop_phase(up_state_cycle(cfg, spec.wilson_samples), true);
        const ConcurrenceReport cr = concurrence_from_phi(phi);

        SweepRow row;
        row.phi = phi;
        row.b = bf.b;
        row.abs_b = bf.abs_b;
        row.gamma_plus = g.plus;
        row.gamma_minus = g.minus;
        row.gamma_wilson = gw;
        row.c_paper = cr.paper_c;
        row.c_wootters_normalized = cr.wootters_c;
        row.abs_err_gamma = circular_distance(gw, g.plus);
        row.abs_err_c = std::abs(std::abs(cr.complex_c) - bf.abs_b);
        report.rows.push_back(row);

        report.max_abs_err =
            std::max({report.max_abs_err, row.abs_err_gamma, row.abs_err_c});
    }
    report.pass = report.max_abs_err <= spec.tolerance;
    return report;
}

void write_sweep_csv(std::ostream& os, const RunReport& report) {
    os << "phi,b,abs_b,gamma_plus,gamma_minus,gamma_wilson,c_paper,"
          "c_wootters_normalized,abs_err_gamma,abs_err_c\n";
    for (const SweepRow& r : report.rows) {
        os << fmt17(r.phi) << ',' << fmt17(r.b) << ',' << fmt17(r.abs_b) << ','
           << fmt17(r.gamma_plus) << ',' << fmt17(r.gamma_minus) << ','
           << fmt17(r.gamma_wilson) << ',' << fmt17(r.c_paper) << ','
           << fmt17(r.c_wootters_normalized) << ',' << fmt17(r.abs_err_gamma) << ','
           << fmt17(r.abs_err_c) << '\n';
    }
}

nlohmann::json sweep_to_json(const SweepSpec& spec, const RunReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& r : report.rows) {
        rows.push_back({{"phi", r.phi},
                        {"b", r.b},
                        {"abs_b", r.abs_b},
                        {"gamma_plus", r.gamma_plus},
                        {"gamma_minus", r.gamma_minus},
                        {"gamma_wilson", r.gamma_wilson},
                        {"c_paper", r.c_paper},
                        {"c_wootters_normalized", r.c_wootters_normalized},
                        {"abs_err_gamma", r.abs_err_gamma},
                        {"abs_err_c", r.abs_err_c}});
    }
    return {{"spec",
             {{"phi_min", spec.phi_min},
              {"phi_max", spec.phi_max},
              {"points", spec.points},
              {"wilson_samples", spec.wilson_samples},
              {"ratio", spec.ratio},
              {"tolerance", spec.tolerance}}},
            {"rows", rows},
            {"summary", {{"max_abs_err", report.max_abs_err}, {"pass", report.pass}}}};
}

} // namespace berry
