#pragma once

// Sparse truncated series in the power sums p_1, p_2, ... (p_i has weight i)
// and an auxiliary variable t counting branch points.

#include <map>
#include <vector>

#include "hqc/partitions.hpp"
#include "hqc/rings.hpp"
#include "hqc/series.hpp"

namespace hqc {

struct Monomial {
    /// p_exponents[i-1] is the exponent of p_i; trailing zeros are trimmed.
    std::vector<int> p_exponents;
    int t_degree = 0;

    int weight() const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    /// p_mu t^k.
    static Monomial from(const Partition& mu, int t_degree);
};

class MultiSeries {
public:
    /// Zero series keeping p-weight <= max_weight and t-degree <= max_t.
    MultiSeries(int max_weight, int max_t);

    static MultiSeries one(int max_weight, int max_t);

    int max_weight() const { return max_weight_; }
    int max_t() const { return max_t_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const;
    Rational coefficient(const Partition& mu, int t_degree) const { return coefficient(Monomial::from(mu, t_degree)); }
    /// Adds c to the coefficient of m; out-of-range monomials are ignored.
    void add_term(const Monomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }

    MultiSeries& operator+=(const MultiSeries& o);
    MultiSeries& operator-=(const MultiSeries& o);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    MultiSeries scaled(const Rational& r) const;

    friend bool operator==(const MultiSeries& a, const MultiSeries& b) { return a.terms_ == b.terms_; }

private:
    bool in_range(const Monomial& m) const { return m.weight() <= max_weight_ && m.t_degree <= max_t_; }
    void require_same_bounds(const MultiSeries& o) const;

    int max_weight_;
    int max_t_;
    std::map<Monomial, Rational> terms_;
};

/// Truncated logarithm; the constant term must be 1.
MultiSeries multiseries_log(const MultiSeries& z);

/// Truncated exponential; the constant term must be 0.
MultiSeries multiseries_exp(const MultiSeries& f);

}  // namespace hqc
