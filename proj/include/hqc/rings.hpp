#pragma once

// Exact scalar rings: rationals, polynomials in the genus parameter lambda,
// and finite sums  c * lambda^k * exp(P(lambda)).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hqc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Exact integer power; negative exponents invert.  0^0 == 1.
Rational pow(const Rational& base, long exponent);

Rational factorial(unsigned n);

Rational binomial(unsigned n, unsigned k);
/// p/q in lowest terms (the two-argument mpq constructor does not canonicalize).
Rational frac(long p, long q);

int cmp(const Rational& a, const Rational& b);

/// A number on the grid (1/2)Z, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(long long value) : twice_(2 * value) {}

    static constexpr HalfInt from_twice(long long twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    /// Throws std::domain_error when r is not on the half-integer grid.
    static HalfInt from_rational(const Rational& r);

    constexpr long long twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    /// Only valid when is_integer().
    constexpr long long as_integer() const { return twice_ / 2; }
    Rational to_rational() const { return frac(static_cast<long>(twice_), 2L); }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt o) {
        twice_ += o.twice_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) {
        twice_ -= o.twice_;
        return *this;
    }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    long long twice_ = 0;
};

constexpr HalfInt half(long long numerator_over_two) { return HalfInt::from_twice(numerator_over_two); }

std::string to_string(HalfInt h);

/// Polynomial in lambda with rational coefficients; zero coefficients are
/// never stored.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(const Rational& constant);
    static LambdaPoly monomial(const Rational& c, int degree);
    /// The polynomial lambda.
    static LambdaPoly lambda() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    Rational coefficient(int degree) const;
    Rational constant_term() const { return coefficient(0); }
    const std::map<int, Rational>& coefficients() const { return coeffs_; }

    LambdaPoly& operator+=(const LambdaPoly& o);
    LambdaPoly& operator-=(const LambdaPoly& o);
    LambdaPoly& operator*=(const Rational& c);
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator-(LambdaPoly a) {
        a *= Rational(-1);
        return a;
    }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    friend LambdaPoly operator*(LambdaPoly a, const Rational& c) { return a *= c; }
    friend LambdaPoly operator*(const Rational& c, LambdaPoly a) { return a *= c; }

    friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend std::strong_ordering operator<=>(const LambdaPoly& a, const LambdaPoly& b);

    std::string to_string() const;

private:
    void set(int degree, Rational c);
    std::map<int, Rational> coeffs_;
};

/// Finite sum  sum_j c_j * lambda^{k_j} * exp(P_j(lambda))  in canonical
/// form: the pairs (k_j, P_j) are distinct and every c_j is nonzero.
///
/// The functions lambda^k exp(P(lambda)) for distinct (k, P) are linearly
/// independent over Q, so a value is zero exactly when its term set is
/// empty.  Constant terms of P stay symbolic.
class ExpPoly {
public:
    struct Key {
        int lambda_power = 0;
        LambdaPoly exponent;
        friend bool operator==(const Key&, const Key&) = default;
        friend std::strong_ordering operator<=>(const Key& a, const Key& b) {
            if (auto c = a.lambda_power <=> b.lambda_power; c != 0) return c;
            return a.exponent <=> b.exponent;
        }
    };
    struct Term {
        Rational coefficient;
        int lambda_power = 0;
        LambdaPoly exponent;
    };

    ExpPoly() = default;
    ExpPoly(const Rational& c);
    static ExpPoly term(const Rational& c, int lambda_power = 0, LambdaPoly exponent = {});
    static ExpPoly exp(LambdaPoly exponent) { return term(1, 0, std::move(exponent)); }
    /// Builds the canonical form of an arbitrary (possibly redundant) term list.
    static ExpPoly canonical(const std::vector<Term>& terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    std::vector<Term> terms() const;

    /// Inverse of a single-term value; nullopt for zero or multi-term values.
    std::optional<ExpPoly> inverse() const;
    /// The lambda -> 0 limit when it is a rational number: every term must
    /// have lambda_power >= 0 and terms with lambda_power == 0 must have an
    /// exponent with zero constant term.  nullopt otherwise.
    std::optional<Rational> limit_at_zero() const;
    /// The value as a plain rational if it is c * lambda^0 * e^0.
    std::optional<Rational> as_rational() const;

    ExpPoly& operator+=(const ExpPoly& o);
    ExpPoly& operator-=(const ExpPoly& o);
    ExpPoly& operator*=(const Rational& c);
    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
    friend ExpPoly operator-(ExpPoly a) {
        a *= Rational(-1);
        return a;
    }
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator*(ExpPoly a, const Rational& c) { return a *= c; }
    friend ExpPoly operator*(const Rational& c, ExpPoly a) { return a *= c; }

    friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

    /// Term list, e.g. "[1/2*L^-1*exp(L), -3*exp(0)]"; "[]" for zero.
    std::string to_string() const;

private:
    void accumulate(const Key& key, const Rational& c);
    std::map<Key, Rational> terms_;
};

ExpPoly expoly_add(const ExpPoly& a, const ExpPoly& b);
ExpPoly expoly_mul(const ExpPoly& a, const ExpPoly& b);
bool expoly_is_zero(const ExpPoly& a);

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p);
std::ostream& operator<<(std::ostream& os, const ExpPoly& e);
std::ostream& operator<<(std::ostream& os, HalfInt h);

/// Coefficient-ring interface used by the series engines.
template <typename C>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static bool is_zero(const Rational& c) { return sgn(c) == 0; }
    static Rational from_rational(const Rational& r) { return r; }
    static Rational scale(const Rational& c, const Rational& r) { return c * r; }
    static std::optional<Rational> inverse(const Rational& c) {
        if (sgn(c) == 0) return std::nullopt;
        return Rational(1 / c);
    }
};

template <>
struct RingTraits<ExpPoly> {
    static ExpPoly zero() { return {}; }
    static ExpPoly one() { return ExpPoly(1); }
    static bool is_zero(const ExpPoly& c) { return c.is_zero(); }
    static ExpPoly from_rational(const Rational& r) { return ExpPoly(r); }
    static ExpPoly scale(const ExpPoly& c, const Rational& r) { return c * r; }
    static std::optional<ExpPoly> inverse(const ExpPoly& c) { return c.inverse(); }
};

}  // namespace hqc
