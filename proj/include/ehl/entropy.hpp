#pragma once

#include <iosfwd>
#include <vector>

#include "ehl/grid.hpp"
#include "ehl/normalization.hpp"

namespace ehl {

// Transient equilibrium F_tau(y) = K_tau phi(e^tau y)^2 G(y) on Omega_tau.
struct TransientEquilibrium {
    HarmonicProfile profile;
    double tau = 0.0;
    double K = 1.0;

    double density(double y) const;      // F_tau(y)
    double boundary() const;             // inner boundary of Omega_tau
};

TransientEquilibrium make_equilibrium(const HarmonicProfile& p, double tau);

// Relative entropy H(g|F_tau) = int g log(g/F_tau). Both g and the sampled
// F are renormalized to unit grid mass, which makes the discrete Jensen and
// Csiszar-Kullback inequalities exact.
double rel_entropy(const RadialField& g, const TransientEquilibrium& eq);

// int g |d/dr log(g/F_tau)|^2 by centred differences of the log-ratio.
// Nodes where g falls below a relative floor contribute zero.
double fisher_information(const RadialField& g, const TransientEquilibrium& eq);

// ||g - F_tau||_1 with the same renormalization as rel_entropy.
double l1_distance(const RadialField& g, const TransientEquilibrium& eq);

// Remainder R(tau) = int g d/dtau log(F_tau), in its integrated-by-parts form
// 2 int (e^tau r phi' / phi) (g - F_tau).
double remainder_R(const RadialField& g, const TransientEquilibrium& eq);

// The same remainder straight from its definition, by centred differences of
// log F_tau in tau. Independent cross-check of remainder_R.
double remainder_R_direct(const RadialField& g, const HarmonicProfile& p, double tau,
                          double dtau = 1e-4);

// Q_g(tau) = int |grad phi|^2 |e^tau y|^2 / phi^2 (g + F_tau).
double q_bound(const RadialField& g, const TransientEquilibrium& eq);

struct EntropyRow {
    double tau, H, fisher, R, ck_gap, balance;
};

struct EntropyTrace {
    std::vector<EntropyRow> rows;
};

// Assembles the trace over consecutive self-similar fields. The balance
// column is dH/dtau + Fisher + R with dH/dtau by centred differences on the
// tau grid; it is NaN at the endpoints.
EntropyTrace entropy_trace(const std::vector<RadialField>& gs,
                           const std::vector<TransientEquilibrium>& eqs);

// Columns: tau,H,fisher,R,ck_gap,balance_residual
void write_csv(const EntropyTrace& trace, std::ostream& out);

}  // namespace ehl
