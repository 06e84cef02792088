#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ehl/grid.hpp"

namespace ehl {

// Configuration errors carry the offending line in the message and map to
// exit code 2 in the CLI.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Parsed run configuration: INI-style sections [domain], [initial], [time],
// [output], [lsi] with `key = value` entries and '#' comments.
struct RunConfig {
    // [domain]
    DomainKind kind = DomainKind::half_line;
    int d = 1;
    double R = 1.0;
    double x0 = 0.0;

    // [initial]
    InitialDatum::Kind datum_kind = InitialDatum::Kind::point_approx;
    double center = 3.0, width = 0.5, mass = 1.0;
    double r1 = 2.0, r2 = 4.0, height = 0.5;
    double location = 2.0, epsilon = 5e-4;

    // [time]
    double t0 = 0.5;
    double t_final = 200.0;
    double ratio = 1.25;
    double dt = 0.0;     // 0 -> grid spacing
    int n = 1201;
    double r_max = 0.0;  // 0 -> Gaussian-tail policy

    // [output]
    std::string dir = "out";
    std::string formats = "csv,json";

    // [lsi]
    std::vector<double> tau_list = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    double c_assembly = 1.0;
    int poincare_n = 2000;

    ExteriorDomain domain() const;
    InitialDatum datum() const;
    std::vector<double> solve_times() const;  // geometric from t0 to t_final
    double resolved_r_max() const;
    double resolved_dt() const;
};

RunConfig parse_config(const std::string& text);

}  // namespace ehl
