#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "ehl/geometry.hpp"

namespace ehl {

enum class GridRule { uniform, graded_toward_boundary };

// Radial grid with precomputed quadrature weights. The weights already carry
// the r^{d-1} factor of the radial measure, so integrals over the domain are
// angular_measure * sum(u_i * qw_i).
struct RadialGrid {
    std::vector<double> r;
    std::vector<double> qw;
    GridRule rule = GridRule::uniform;

    int size() const { return static_cast<int>(r.size()); }
    double spacing_min() const;
};

// Uniform grid with composite-Simpson weights (n is bumped to odd).
// Used for smooth fields produced by the exact kernel solver.
RadialGrid make_uniform_grid(int d, double lo, double hi, int n);

// Finite-volume grid: cell weights are exact cell volumes int_cell s^{d-1} ds.
// The graded rule doubles the node density within distance 1 of lo.
RadialGrid make_fv_grid(int d, double lo, double hi, int n, GridRule rule);

// omega_{d-1} for radial domains, 1 for the half-line (whose grid coordinate
// is the actual spatial coordinate).
double angular_measure(const ExteriorDomain& dom);

struct RadialField {
    ExteriorDomain domain;
    RadialGrid grid;
    std::vector<double> u;
    double time = 0.0;  // t for physical fields, tau for self-similar fields
};

enum class MomentWeight { one, phi };

// omega int u(r) w(r) |r|^k r^{d-1} dr over the field's grid.
double moment(const RadialField& f, int k, MomentWeight w);
double field_integral(const RadialField& f);              // moment(f, 0, one)
double harmonic_mass(const RadialField& f);               // moment(f, 0, phi)

// Initial data menu. All nonnegative and radially symmetric.
struct InitialDatum {
    enum class Kind { gaussian_shell, annulus, point_approx };
    Kind kind = Kind::gaussian_shell;
    double center = 0.0, width = 1.0, mass = 1.0;  // gaussian_shell
    double r1 = 0.0, r2 = 0.0, height = 0.0;       // annulus
    double location = 0.0, eps = 0.0;              // point_approx

    static InitialDatum make_gaussian_shell(double center, double width, double mass);
    static InitialDatum make_annulus(double r1, double r2, double height);
    static InitialDatum make_point_approx(double location, double eps);

    double support_lo() const;
    double support_hi() const;
};

// Density value of the datum in the given domain. Gaussian amplitudes are
// normalized so the domain integral equals the requested mass.
double datum_value(const InitialDatum& u0, const ExteriorDomain& dom, double r);

// Same density with the normalizing amplitude precomputed once.
std::function<double(double)> datum_evaluator(const InitialDatum& u0, const ExteriorDomain& dom);

// Validates nonnegativity/support and samples onto a grid.
std::vector<double> sample_datum(const InitialDatum& u0, const ExteriorDomain& dom,
                                 const RadialGrid& grid);

// Field snapshot as CSV with '#' metadata lines (t, d, domain).
void write_field_csv(const RadialField& f, std::ostream& out);

}  // namespace ehl
