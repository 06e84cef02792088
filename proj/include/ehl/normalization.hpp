#pragma once

#include <iosfwd>
#include <vector>

#include "ehl/geometry.hpp"
#include "ehl/quadrature.hpp"

namespace ehl {

// I_tau = int_{Omega_tau} phi(e^tau y)^2 G(y) dy, the normalization integral
// of the transient equilibrium. K_tau = 1/I_tau.
double i_tau(const HarmonicProfile& p, double tau, double* err_estimate = nullptr);

// k_t with k_t int phi^2 Gamma(t,.) = 1, valid for t >= 1/2 via tau = log(2t)/2.
double k_of_t(const HarmonicProfile& p, double t);

// d/dtau I_tau = 2 e^tau int phi(e^tau y) (y . grad phi(e^tau y)) G(y) dy.
double i_tau_prime(const HarmonicProfile& p, double tau);

// |K'_tau| / K_tau = |I'_tau| / I_tau.
double kprime_over_k(const HarmonicProfile& p, double tau);

// Scaled distance of K_tau to its large-tau asymptote:
// |K - 2e^{-2tau}| (d=1), tau^3 |K - tau^{-2}| (d=2), e^{(d-2)tau} |K - 1| (d>=3).
double asymptote_residual(const HarmonicProfile& p, double tau);

struct NormalizationRow {
    double tau, I, K, Iprime, err;
};

struct NormalizationTable {
    HarmonicProfile profile;
    std::vector<NormalizationRow> rows;
};

NormalizationTable make_normalization_table(const HarmonicProfile& p,
                                            const std::vector<double>& taus);

// Columns: tau,I,K,Iprime,err
void write_csv(const NormalizationTable& table, std::ostream& out);

}  // namespace ehl
