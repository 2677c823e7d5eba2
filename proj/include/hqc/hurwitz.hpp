#pragma once

// Disconnected and connected q-double / r-spin / mixed Hurwitz numbers.
//
// For a cycle type mu of degree d = q s and m branch points the disconnected
// vacuum expectation value is evaluated on the Schur basis:
//
//   D(m, mu) = sum_{lambda |- d} chi^lambda_mu / prod(mu_i)
//                                * F_{r+1}(lambda)^m
//                                * chi^lambda_{(q^s)} / (q^s s!)
//
// where F_{r+1}(lambda) = p-bar_{r+1}(lambda) / (r+1) is the eigenvalue of the
// completed-cycle operator  r! [w^{r+1}] Etilde_0(w).  Connected values follow
// from the exponential formula over set partitions of the parts of mu, with
// the branch points distributed multinomially.
//
// Two further routes serve as oracles: direct action in the Fock model, and
// the logarithm of the multivariate partition function.

#include <functional>
#include <optional>
#include <stdexcept>

#include "hqc/multiseries.hpp"
#include "hqc/partitions.hpp"
#include "hqc/rings.hpp"

namespace hqc::hurwitz {

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct HurwitzParams {
    int r = 1;
    int q = 1;
    int g = 0;
    Partition mu;
    // derived
    int s = 0;
    int ell = 0;
    int m = 0;

    /// Throws ParameterError naming the violated constraint: r, q >= 1,
    /// g >= 0, mu nonempty, "q divides |mu|", and integrality/nonnegativity
    /// of m = (2g - 2 + l(mu) + s) / r.
    static HurwitzParams make(int r, int q, int g, Partition mu);
};

struct HurwitzValue {
    HurwitzParams params;
    Rational value;
};

/// Riemann-Hurwitz: the genus belonging to m branch points, if integral and
/// nonnegative (q must divide |mu|).
std::optional<int> genus_for(int m, const Partition& mu, int r, int q);

/// F_{r+1}(lambda) = shifted_power_sum(lambda, r+1) / (r+1).
Rational completed_cycle_eigenvalue(const Partition& lambda, int r);

/// Character-formula disconnected value; zero when q does not divide |mu|.
Rational disconnected_vev(int m, const Partition& mu, int r, int q);

/// Same quantity by applying alpha and Etilde operators in the Fock model.
Rational disconnected_vev_fock(int m, const Partition& mu, int r, int q);

using DisconnectedFn = std::function<Rational(int, const Partition&)>;

/// Inverts  D(m, S) = sum_{B containing the first part} sum_j binom(m, j)
/// C(j, B) D(m - j, S \ B)  for C(m, mu).  `disconnected` must return the
/// disconnected value for any sub-multiset of mu (and 1 or 0 at the empty
/// partition for m = 0 or m > 0).
Rational connected_from_disconnected(int m, const Partition& mu, const DisconnectedFn& disconnected);

/// Connected value from the character formula (memoized per thread).
Rational connected_vev(int m, const Partition& mu, int r, int q);
/// Connected value from the Fock route.
Rational connected_vev_fock(int m, const Partition& mu, int r, int q);

HurwitzValue connected_hurwitz(const HurwitzParams& params);

/// Closed-form (0,1) coefficient: the exponent of p and its coefficient.
struct F01Term {
    int part = 0;
    Rational coefficient;
};

/// (nq)^{n-2}/n!  of p_{nq},  n >= 1.
F01Term f01_qdouble(int n, int q);
/// (rn+1)^{n-2}/n!  of p_{rn+1},  n >= 0.
F01Term f01_rspin(int n, int r);
/// q((nr+1)q)^{n-2}/n!  of p_{(nr+1)q},  n >= 0.
F01Term f01_mixed(int n, int r, int q);
/// Family-indexed closed form: q-double indexing when r == 1, otherwise the
/// mixed formula (which is the r-spin one when q == 1).
F01Term f01_coefficient(int n, int r, int q);
/// Coefficient of p_d in F_{0,1}, index free.
Rational f01_by_part(int d, int r, int q);

/// log of  Z(p, t) = sum_lambda s_lambda(p) exp(t F_{r+1}(lambda))
///                    chi^lambda_{(q^s)} / (q^s s!),  |lambda| <= max_weight.
MultiSeries log_z_oracle(int max_weight, int max_t, int r, int q);

/// Connected value read off the log-Z oracle:  [p_mu t^m] * m! * |Aut(mu)|.
Rational log_z_connected(const MultiSeries& log_z, int m, const Partition& mu);

}  // namespace hqc::hurwitz
