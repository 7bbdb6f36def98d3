#pragma once

// Tilt-angle sweep: per-angle closed forms, Wilson-loop cross-check, and
// both concurrence curves, with CSV/JSON emission for plotting.

#include <iosfwd>
#include <vector>

#include "berry/errors.hpp"

#include <nlohmann/json_fwd.hpp>

namespace berry {

struct SweepSpec {
    double phi_min = 0.0;
    double phi_max = 3.14159265358979323846;
    int points = 64;
    int wilson_samples = 10000;
    double ratio = 500.0; // omega_larmor / omega0, echoed into reports
    double tolerance = 1e-6;
};

// throws DomainError on an invalid spec
void validate(const SweepSpec& spec);

struct SweepRow {
    double phi;
    double b;
    double abs_b;
    double gamma_plus;
    double gamma_minus;
    double gamma_wilson;
    double c_paper;                // raw-coefficient curve sin^2(phi/2)
    double c_wootters_normalized;  // oracle on the normalized state
    double abs_err_gamma;          // circular distance wilson vs closed form
    double abs_err_c;              // | |2 alpha beta| - |b| |
};

struct RunReport {
    std::vector<SweepRow> rows;
    double max_abs_err = 0.0;
    bool pass = false;
};

RunReport run_sweep(const SweepSpec& spec);

// header + one row per angle, 17 significant digits, LF line endings
void write_sweep_csv(std::ostream& os, const RunReport& report);

// single object with "spec", "rows", "summary"
nlohmann::json sweep_to_json(const SweepSpec& spec, const RunReport& report);

} // namespace berry
