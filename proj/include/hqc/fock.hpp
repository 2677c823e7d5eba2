#pragma once

// Finite-support model of the charged semi-infinite wedge space.
//
// A basis vector  i_1 ^ i_2 ^ ...  (i_1 > i_2 > ...) is stored as a "sea
// level" below which every half-integer is occupied, plus the finite list of
// occupied positions above it.  Operator actions are exact: on a fixed basis
// state every defining infinite sum has finite support.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hqc/partitions.hpp"
#include "hqc/rings.hpp"
#include "hqc/series.hpp"

namespace hqc::fock {

class MayaState {
public:
    /// The charge-c vacuum  (c-1/2) ^ (c-3/2) ^ ...
    static MayaState vacuum(int charge = 0);
    /// v_lambda = (lambda_1 - 1/2) ^ (lambda_2 - 3/2) ^ ...
    static MayaState from_partition(const Partition& lambda);
    /// All positions <= sea plus the listed ones (any order, no repeats).
    /// Positions must be half-odd.
    static MayaState from_positions(HalfInt sea, std::vector<HalfInt> occupied_above);

    int charge() const;
    bool occupied(HalfInt k) const;
    /// Number of occupied positions strictly greater than k.
    long long count_above(HalfInt k) const;
    HalfInt sea() const { return sea_; }
    /// Occupied positions above the sea, descending.
    const std::vector<HalfInt>& above() const { return above_; }
    HalfInt highest_occupied() const { return above_.empty() ? sea_ : above_.front(); }
    /// Defined on the charge-0 sector only.
    std::optional<Partition> to_partition() const;

    /// Psi_k: wedge k in front; sign of sorting it into place.
    std::optional<std::pair<MayaState, int>> inserted(HalfInt k) const;
    /// Psi*_k, the adjoint of Psi_k.
    std::optional<std::pair<MayaState, int>> removed(HalfInt k) const;

    friend bool operator==(const MayaState&, const MayaState&) = default;
    friend auto operator<=>(const MayaState&, const MayaState&) = default;

private:
    void canonicalize();
    HalfInt sea_ = half(-1);
    std::vector<HalfInt> above_;
};

inline bool coefficient_is_zero(const Rational& c) { return sgn(c) == 0; }
template <typename C>
bool coefficient_is_zero(const TruncSeries<C>& c) {
    return c.is_zero();
}

template <typename C>
struct FockVector {
    std::map<MayaState, C> terms;

    static FockVector basis(const MayaState& s, C c) {
        FockVector v;
        v.add(s, std::move(c));
        return v;
    }
    bool is_zero() const { return terms.empty(); }
    void add(const MayaState& s, const C& c) {
        if (coefficient_is_zero(c)) return;
        auto [it, inserted] = terms.try_emplace(s, c);
        if (inserted) return;
        it->second += c;
        if (coefficient_is_zero(it->second)) terms.erase(it);
    }
    FockVector& operator+=(const FockVector& o) {
        for (const auto& [s, c] : o.terms) add(s, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        for (const auto& [s, c] : o.terms) add(s, -c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend bool operator==(const FockVector&, const FockVector&) = default;
};

using QVector = FockVector<Rational>;

inline QVector vacuum_vector() { return QVector::basis(MayaState::vacuum(), 1); }
inline QVector basis_vector(const Partition& lambda) { return QVector::basis(MayaState::from_partition(lambda), 1); }

/// One summand  coefficient * state  produced by a basis-level action.
struct Image {
    MayaState state;
    int sign;
    /// k - n/2 for the E-operator summand that produced it.
    HalfInt energy_shift;
};

/// :Psi_i Psi*_j: on a basis state, using the case split on the sign of j.
std::optional<std::pair<MayaState, int>> normal_ordered(HalfInt i, HalfInt j, const MayaState& s);

/// All nonzero summands of  sum_k :Psi_{k-n} Psi*_k:  on a basis state.
std::vector<Image> e_operator_images(int n, const MayaState& s);

QVector psi(HalfInt k, const QVector& v);
QVector psi_star(HalfInt k, const QVector& v);
/// alpha_n, n != 0.
QVector alpha(int n, const QVector& v);
/// [z^j] of  Etilde_n(z) v.
QVector e_tilde_coefficient(int n, int j, const QVector& v);
/// Etilde_n(z) v with series coefficients truncated at z^z_order.
FockVector<QSeries> e_tilde(int n, const QVector& v, int z_order);

/// Coefficient of the vacuum.
Rational vev(const QVector& v);
/// Inner product (basis vectors are orthonormal).
Rational inner(const QVector& a, const QVector& b);

/// p-bar_j(lambda) = sum_i [(lambda_i - i + 1/2)^j - (-i + 1/2)^j].
Rational shifted_power_sum(const Partition& lambda, int j);

struct CommutatorFailure {
    MayaState state;
    int w_degree;
    int z_degree;
};

struct CommutatorReport {
    bool passed = true;
    std::optional<CommutatorFailure> failure;
};

/// Checks  [Etilde_k(w), Etilde_l(z)] = zeta(kz - lw) E_{k+l}(z+w)  on each
/// test state, coefficientwise for w- and z-degrees up to z_order.  For
/// k + l = 0 the right side uses E_0 = Etilde_0 + 1/zeta.
CommutatorReport verify_commutator(int k, int l, int z_order, const std::vector<MayaState>& test_states);

/// zeta(z) E_0(z)|0> = |0>  through z^z_order, with 1/zeta(z) = u(z)/z.
bool verify_vacuum_e0(int z_order);

}  // namespace hqc::fock
