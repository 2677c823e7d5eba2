#include "hqc/multiseries.hpp"

#include <algorithm>

namespace hqc {

namespace {

void trim(std::vector<int>& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

}  // namespace

int Monomial::weight() const {
    int w = 0;
    for (std::size_t i = 0; i < p_exponents.size(); ++i) w += static_cast<int>(i + 1) * p_exponents[i];
    return w;
}

Monomial Monomial::from(const Partition& mu, int t_degree) {
    Monomial m;
    m.t_degree = t_degree;
    for (int part : mu.parts()) {
        if (static_cast<int>(m.p_exponents.size()) < part) m.p_exponents.resize(static_cast<std::size_t>(part), 0);
        ++m.p_exponents[static_cast<std::size_t>(part - 1)];
    }
    return m;
}

MultiSeries::MultiSeries(int max_weight, int max_t) : max_weight_(max_weight), max_t_(max_t) {
    if (max_weight < 0 || max_t < 0) throw SeriesError("MultiSeries: negative truncation bound");
}

MultiSeries MultiSeries::one(int max_weight, int max_t) {
    MultiSeries s(max_weight, max_t);
    s.add_term(Monomial{}, 1);
    return s;
}

Rational MultiSeries::coefficient(const Monomial& m) const {
    Monomial key = m;
    trim(key.p_exponents);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiSeries::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0 || !in_range(m)) return;
    Monomial key = m;
    trim(key.p_exponents);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

void MultiSeries::require_same_bounds(const MultiSeries& o) const {
    if (o.max_weight_ != max_weight_ || o.max_t_ != max_t_) throw SeriesError("MultiSeries: truncation bound mismatch");
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
    require_same_bounds(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
    require_same_bounds(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.require_same_bounds(b);
    MultiSeries out(a.max_weight_, a.max_t_);
    for (const auto& [ma, ca] : a.terms_) {
        const int wa = ma.weight();
        for (const auto& [mb, cb] : b.terms_) {
            if (wa + mb.weight() > a.max_weight_ || ma.t_degree + mb.t_degree > a.max_t_) continue;
            Monomial m;
            m.t_degree = ma.t_degree + mb.t_degree;
            m.p_exponents.assign(std::max(ma.p_exponents.size(), mb.p_exponents.size()), 0);
            for (std::size_t i = 0; i < ma.p_exponents.size(); ++i) m.p_exponents[i] += ma.p_exponents[i];
            for (std::size_t i = 0; i < mb.p_exponents.size(); ++i) m.p_exponents[i] += mb.p_exponents[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

MultiSeries MultiSeries::scaled(const Rational& r) const {
    MultiSeries out(max_weight_, max_t_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * r);
    return out;
}

MultiSeries multiseries_log(const MultiSeries& z) {
    if (z.coefficient(Monomial{}) != 1) throw SeriesError("multiseries_log: constant term must be 1");
    MultiSeries x = z - MultiSeries::one(z.max_weight(), z.max_t());
    MultiSeries out(z.max_weight(), z.max_t());
    MultiSeries power = x;
    // every monomial of x has positive weight or positive t-degree, so x is nilpotent
    for (int k = 1; !power.is_zero(); ++k) {
        out += power.scaled(frac(k % 2 == 1 ? 1 : -1, k));
        power = power * x;
    }
    return out;
}

MultiSeries multiseries_exp(const MultiSeries& f) {
    if (f.coefficient(Monomial{}) != 0) throw SeriesError("multiseries_exp: constant term must be 0");
    MultiSeries out = MultiSeries::one(f.max_weight(), f.max_t());
    MultiSeries power = MultiSeries::one(f.max_weight(), f.max_t());
    for (int k = 1;; ++k) {
        power = (power * f).scaled(frac(1, k));
        if (power.is_zero()) break;
        out += power;
    }
    return out;
}

}  // namespace hqc
