#include "ehl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace ehl {

namespace {

// Nodes and weights of the 7-point Gauss / 15-point Kronrod pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double res_g = kWg[3] * fc;
    double res_k = kWgk[7] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        res_k += kWgk[j] * fsum;
        if (j % 2 == 1)  // odd Kronrod indices are the Gauss nodes
            res_g += kWg[j / 2] * fsum;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = res_k * h;
    const double diff = std::abs(res_k - res_g) * std::abs(h);
    // QUADPACK-style sharpened error estimate
    p.error = diff < 1.0 ? std::pow(200.0 * diff, 1.5) : diff;
    if (p.error > diff) p.error = diff;
    p.error = std::max(p.error, std::abs(p.value) * 1e-16);
    return p;
}

}  // namespace

QuadResult integrate_panels(const std::function<double(double)>& f,
                            const std::vector<double>& breaks, const QuadOptions& opt) {
    std::priority_queue<Panel> heap;
    double total = 0.0, err = 0.0;
    int count = 0;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (!(breaks[i] < breaks[i + 1])) continue;
        Panel p = gk15(f, breaks[i], breaks[i + 1]);
        total += p.value;
        err += p.error;
        heap.push(p);
        ++count;
    }
    auto tol = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total)); };
    while (err > tol() && !heap.empty()) {
        if (count >= opt.max_intervals)
            throw QuadratureError(
                "quadrature did not converge: achieved error " + std::to_string(err) +
                    " > tolerance " + std::to_string(tol()),
                err);
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) continue;  // interval at rounding limit
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    QuadResult r;
    r.value = total;
    r.error = err;
    r.intervals = count;
    return r;
}

QuadResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                        const QuadOptions& opt) {
    return integrate_panels(f, {a, b}, opt);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt) {
    return integrate_gk(f, a, b, opt).value;
}

double unit_sphere_area(int d) {
    if (d < 1) throw std::invalid_argument("unit_sphere_area: dimension must be >= 1");
    return 2.0 * std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d);
}

}  // namespace ehl
