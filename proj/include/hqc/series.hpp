#pragma once

// Truncated formal power series  c_0 + c_1 z + ... + c_N z^N  over a
// commutative coefficient ring (Rational or ExpPoly, see RingTraits).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hqc/rings.hpp"

namespace hqc {

class SeriesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <typename C>
class TruncSeries {
public:
    using Traits = RingTraits<C>;

    /// The zero series of the given order.
    explicit TruncSeries(int order) : coeffs_(checked_size(order), Traits::zero()) {}

    /// Coefficients beyond `order` are dropped, missing ones are zero.
    TruncSeries(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(checked_size(order), Traits::zero());
    }

    static TruncSeries constant(int order, C c) {
        TruncSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }
    /// c * z^k (zero if k > order).
    static TruncSeries monomial(int order, int k, C c = Traits::one()) {
        TruncSeries s(order);
        if (k <= order) s.coeffs_.at(static_cast<std::size_t>(k)) = std::move(c);
        return s;
    }
    static TruncSeries variable(int order) { return monomial(order, 1); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const C& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    C& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<C>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!Traits::is_zero(c)) return false;
        return true;
    }
    /// Index of the first nonzero coefficient; nullopt for the zero series.
    std::optional<int> valuation() const {
        for (int n = 0; n <= order(); ++n)
            if (!Traits::is_zero((*this)[n])) return n;
        return std::nullopt;
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        require_same_order(o);
        for (int n = 0; n <= order(); ++n) (*this)[n] += o[n];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        require_same_order(o);
        for (int n = 0; n <= order(); ++n) (*this)[n] -= o[n];
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator-(TruncSeries a) { return a.scaled(Rational(-1)); }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_order(b);
        const int N = a.order();
        TruncSeries out(N);
        for (int i = 0; i <= N; ++i) {
            if (Traits::is_zero(a[i])) continue;
            for (int j = 0; i + j <= N; ++j) {
                if (Traits::is_zero(b[j])) continue;
                out[i + j] += a[i] * b[j];
            }
        }
        return out;
    }

    TruncSeries scaled(const Rational& r) const {
        TruncSeries out(*this);
        for (auto& c : out.coeffs_) c = Traits::scale(c, r);
        return out;
    }
    TruncSeries times(const C& c) const {
        TruncSeries out(*this);
        for (auto& v : out.coeffs_) v = v * c;
        return out;
    }

    /// Multiplies by z^k, dropping overflow (k >= 0) or requiring the
    /// vanishing of the first -k coefficients (k < 0).
    TruncSeries shifted(int k) const {
        TruncSeries out(order());
        for (int n = 0; n <= order(); ++n) {
            const int m = n + k;
            if (m < 0) {
                if (!Traits::is_zero((*this)[n])) throw SeriesError("shift would produce a negative power");
                continue;
            }
            if (m <= order()) out[m] = (*this)[n];
        }
        return out;
    }

    /// Same coefficients at a different truncation order.
    TruncSeries with_order(int order) const { return TruncSeries(order, coeffs_); }

    /// z d/dz.
    TruncSeries euler_derivative() const {
        TruncSeries out(*this);
        for (int n = 0; n <= order(); ++n) out[n] = Traits::scale(out[n], Rational(n));
        return out;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

    void require_same_order(const TruncSeries& o) const {
        if (o.order() != order())
            throw SeriesError("truncation order mismatch: " + std::to_string(order()) + " vs " +
                              std::to_string(o.order()));
    }

private:
    static std::size_t checked_size(int order) {
        if (order < 0) throw SeriesError("negative truncation order");
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<C> coeffs_;
};

template <typename C>
TruncSeries<C> add(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    return a + b;
}
template <typename C>
TruncSeries<C> mul(const TruncSeries<C>& a, const TruncSeries<C>& b) {
    return a * b;
}
template <typename C>
TruncSeries<C> scale(const TruncSeries<C>& a, const Rational& r) {
    return a.scaled(r);
}

/// outer(inner(z)) truncated at the common order; inner must have zero
/// constant term.
template <typename C>
TruncSeries<C> compose(const TruncSeries<C>& outer, const TruncSeries<C>& inner) {
    using Traits = RingTraits<C>;
    outer.require_same_order(inner);
    if (!Traits::is_zero(inner[0])) throw SeriesError("compose: inner series has a nonzero constant term");
    const int N = outer.order();
    TruncSeries<C> out = TruncSeries<C>::constant(N, outer[N]);
    for (int n = N - 1; n >= 0; --n) {
        out = out * inner;
        out[0] += outer[n];
    }
    return out;
}

/// Multiplicative inverse; the constant term must be a unit of the ring.
template <typename C>
TruncSeries<C> inverse(const TruncSeries<C>& f) {
    using Traits = RingTraits<C>;
    auto inv0 = Traits::inverse(f[0]);
    if (!inv0) throw SeriesError("inverse: constant term is not invertible");
    const int N = f.order();
    TruncSeries<C> g(N);
    g[0] = *inv0;
    for (int n = 1; n <= N; ++n) {
        C acc = Traits::zero();
        for (int k = 1; k <= n; ++k)
            if (!Traits::is_zero(f[k])) acc += f[k] * g[n - k];
        g[n] = -(acc * *inv0);
    }
    return g;
}

/// exp(f) for f with zero constant term, via  n g_n = sum_k k f_k g_{n-k}.
template <typename C>
TruncSeries<C> exp_series(const TruncSeries<C>& f) {
    using Traits = RingTraits<C>;
    if (!Traits::is_zero(f[0])) throw SeriesError("exp_series: nonzero constant term");
    const int N = f.order();
    TruncSeries<C> g(N);
    g[0] = Traits::one();
    for (int n = 1; n <= N; ++n) {
        C acc = Traits::zero();
        for (int k = 1; k <= n; ++k)
            if (!Traits::is_zero(f[k])) acc += Traits::scale(f[k] * g[n - k], Rational(k));
        g[n] = Traits::scale(acc, frac(1, n));
    }
    return g;
}

/// log(g) for g with constant term exactly 1.
template <typename C>
TruncSeries<C> log_series(const TruncSeries<C>& g) {
    using Traits = RingTraits<C>;
    if (!(g[0] == Traits::one())) throw SeriesError("log_series: constant term must be 1");
    const int N = g.order();
    TruncSeries<C> f(N);
    for (int n = 1; n <= N; ++n) {
        C acc = Traits::scale(g[n], Rational(n));
        for (int k = 1; k < n; ++k)
            if (!Traits::is_zero(f[k])) acc -= Traits::scale(f[k] * g[n - k], Rational(k));
        f[n] = Traits::scale(acc, frac(1, n));
    }
    return f;
}

template <typename C>
TruncSeries<C> power(const TruncSeries<C>& f, unsigned e) {
    TruncSeries<C> out = TruncSeries<C>::constant(f.order(), RingTraits<C>::one());
    for (unsigned i = 0; i < e; ++i) out = out * f;
    return out;
}

using QSeries = TruncSeries<Rational>;

/// Principal-branch Lambert W:  [z^n] = (-1)^{n+1} n^{n-1} / n!.
QSeries lambert_w(int order);

/// (W(x)/x)^alpha:  [x^n] = alpha (n+alpha)^{n-1} (-1)^n / n!.
QSeries w_power_ratio(const Rational& alpha, int order);

/// zeta(z)/z where zeta(z) = e^{z/2} - e^{-z/2}; a unit series.
QSeries zeta_over_z(int order);

/// u(z) with 1/zeta(z) = u(z)/z.
QSeries inverse_zeta_times_z(int order);

/// zeta(k u)/zeta(u) as a power series in u.
QSeries zeta_ratio(long k, int order);

}  // namespace hqc
