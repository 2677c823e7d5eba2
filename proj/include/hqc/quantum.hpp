#pragma once

// Quantum curves as exact operator words acting on x-series with ExpPoly
// coefficients.
//
// Quantization:  x^ = multiplication by x,  y^ = lambda x d/dx.  Every
// exponential that appears is diagonal on monomials once the conjugation rule
// y^ x^a = x^a (y^ + a lambda) has been applied, so an exponential generator
// carries a polynomial R(lambda, y) and acts by  x^e -> exp(R(lambda, lambda e)) x^e.

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "hqc/rings.hpp"
#include "hqc/series.hpp"
#include "hqc/spectral.hpp"

namespace hqc::quantum {

/// Polynomial in (lambda, y) with rational coefficients.
class LambdaYPoly {
public:
    LambdaYPoly() = default;
    LambdaYPoly(const Rational& constant);
    static LambdaYPoly lambda();
    static LambdaYPoly y();

    /// (lambda-degree, y-degree) -> coefficient.
    const std::map<std::pair<int, int>, Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    LambdaYPoly& operator+=(const LambdaYPoly& o);
    LambdaYPoly& operator-=(const LambdaYPoly& o);
    friend LambdaYPoly operator+(LambdaYPoly a, const LambdaYPoly& b) { return a += b; }
    friend LambdaYPoly operator-(LambdaYPoly a, const LambdaYPoly& b) { return a -= b; }
    friend LambdaYPoly operator*(const LambdaYPoly& a, const LambdaYPoly& b);
    friend LambdaYPoly operator*(const Rational& c, const LambdaYPoly& a);
    friend bool operator==(const LambdaYPoly&, const LambdaYPoly&) = default;
    LambdaYPoly pow(unsigned e) const;

    /// R(lambda, lambda * e).
    LambdaPoly at_exponent(const Rational& e) const;
    /// R / lambda; throws std::domain_error if lambda does not divide R.
    LambdaYPoly divided_by_lambda() const;
    /// Coefficients of R(0, y) in y.
    std::vector<Rational> at_lambda_zero() const;

private:
    void add_term(int i, int j, const Rational& c);
    std::map<std::pair<int, int>, Rational> coeffs_;
};

struct MulX {
    HalfInt power;
    friend bool operator==(const MulX&, const MulX&) = default;
};
struct YHat {
    friend bool operator==(const YHat&, const YHat&) = default;
};
struct ExpDiag {
    LambdaYPoly exponent;
    friend bool operator==(const ExpDiag&, const ExpDiag&) = default;
};
using Generator = std::variant<MulX, YHat, ExpDiag>;

/// scalar * g_1 g_2 ... g_k; the rightmost generator acts first.
struct Word {
    ExpPoly scalar = ExpPoly(1);
    std::vector<Generator> generators;
};

/// Formal sum of words.
class Operator {
public:
    Operator() = default;
    explicit Operator(Word w) { words_.push_back(std::move(w)); }

    const std::vector<Word>& words() const { return words_; }
    std::vector<Word>& words() { return words_; }

    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    /// Composition: (a * b) f = a(b(f)).
    friend Operator operator*(const Operator& a, const Operator& b);
    friend Operator operator*(const ExpPoly& c, Operator a);

private:
    std::vector<Word> words_;
};

Operator x_hat(HalfInt power);
Operator y_hat();
Operator exp_diag(LambdaYPoly exponent);
Operator scalar(const ExpPoly& c);
Operator power(const Operator& op, unsigned e);

/// Series in x with exponents on (1/2)Z, truncated above `order`.
class XSeries {
public:
    explicit XSeries(int order) : order_(order) {}
    static XSeries monomial(int order, HalfInt exponent, ExpPoly c = ExpPoly(1));

    int order() const { return order_; }
    const std::map<HalfInt, ExpPoly>& coefficients() const { return coeffs_; }
    ExpPoly coefficient(HalfInt e) const;
    /// Adds c at x^e; exponents above the order are dropped.
    void add(HalfInt e, const ExpPoly& c);
    void set(HalfInt e, ExpPoly c);
    bool is_zero() const { return coeffs_.empty(); }

    friend bool operator==(const XSeries&, const XSeries&) = default;

private:
    int order_;
    std::map<HalfInt, ExpPoly> coeffs_;
};

/// Applies every word right-to-left and sums; results are truncated at the
/// input order only after each complete word.
XSeries apply(const Operator& op, const XSeries& f);

/// Eigenvalue polynomial R(lambda, y) of a diagonal operator built from MulX
/// and YHat with rational scalars, via  y^ x^a = x^a (y^ + a lambda).
/// Throws std::invalid_argument if a word shifts exponents or contains an
/// exponential.
LambdaYPoly diagonal_symbol(const Operator& op);

/// Principal specialization  sum_n x^{qn} / (lambda^n q^n n!)
///   * exp(lambda^r ((qn - 1/2)^{r+1} - (-1/2)^{r+1}) / (r+1)),  qn <= order.
XSeries z_principal(int r, int q, int order);
/// sum_i x^{iq}/(i! (lambda q)^i) exp(lambda ((iq - 1/2)^2 - (-1/2)^2) / 2).
XSeries z_principal_qdouble(int q, int order);
/// sum_d x^d/(lambda^d d!) exp(lambda^r ((d - 1/2)^{r+1} - (-1/2)^{r+1}) / (r+1)).
XSeries z_principal_rspin(int r, int order);

/// lambda x d/dx - (x e^{lambda (q-1)/2})^q e^{q lambda x d/dx}.
Operator qdouble_operator(int q);
/// lambda x d/dx - A, with A x^n = exp(lambda^r ((n+1/2)^{r+1} - (n-1/2)^{r+1})/(r+1)) x^{n+1}.
Operator rspin_operator(int r);
/// y^ - x^{q+1/2} exp(((y^ + q lambda)^{r+1} - y^{r+1}) / ((r+1) lambda)) x^{-1/2}.
Operator mixed_operator(int r, int q);
/// Simplified annihilator for the family: q-double when r == 1, r-spin when
/// q == 1, mixed otherwise.
Operator quantum_operator(int r, int q);

/// y^ - (e^{c y^} x^ e^{-c y^})^q e^{q y^},  c = (q-1)/2.
Operator qdouble_operator_raw(int q);
/// y^ - x^{3/2} exp(sum_i x^-1 y^i x y^{r-i} / (r+1)) x^{-1/2}.
Operator rspin_operator_raw(int r);
/// y^ - x^{q+1/2} exp(q/(r+1) sum_i x^-q y^i x^q y^{r-i}) x^{-1/2}.
Operator mixed_operator_raw(int r, int q);
Operator quantum_operator_raw(int r, int q);

/// First exponent on which two operators act differently, over monomials x^e.
std::optional<HalfInt> first_disagreement(const Operator& a, const Operator& b, const std::vector<HalfInt>& exponents);

struct AnnihilationCheck {
    bool passed = true;
    std::optional<HalfInt> exponent;
    ExpPoly residual;
};

/// op(z) must vanish at every exponent <= max_exponent.
AnnihilationCheck check_annihilation(const Operator& op, const XSeries& z, int max_exponent);
/// The family operator (simplified or Table-ordered) against z_principal.
AnnihilationCheck verify_annihilation(int r, int q, int order, bool raw = false);

struct RecurrenceCheck {
    bool passed = true;
    /// Index d of the first failing step a_d -> a_{d+1} (or 0 for a_0 != 1).
    std::optional<int> first_failure;
};

/// lambda q (i+1) a_{i+1} = (x e^{lambda (q-1)/2})^q e^{lambda i q^2} a_i.
RecurrenceCheck check_recurrence_qdouble(int q, const XSeries& z, int d_max);
/// (d+1) lambda a_{d+1} = x exp(lambda^r ((d+1/2)^{r+1} - (d-1/2)^{r+1})/(r+1)) a_d.
RecurrenceCheck check_recurrence_rspin(int r, const XSeries& z, int d_max);
/// lambda q (n+1) a_{n+1} = x^q exp(lambda^r ((q(n+1)-1/2)^{r+1} - (qn-1/2)^{r+1})/(r+1)) a_n.
RecurrenceCheck check_recurrence_mixed(int r, int q, const XSeries& z, int d_max);
/// Runs the mixed recurrence, plus the q-double one when r == 1 and the
/// r-spin one when q == 1.
RecurrenceCheck verify_recurrence(int r, int q, int d_max);

/// Commutative symbol at lambda -> 0 (y^ -> y(x), x^ -> x, exp generators ->
/// exp(R(0, y))) evaluated on the spectral series y(x); must vanish through
/// x^order.
spectral::SeriesCheck check_semiclassical(const Operator& op, const QSeries& y);
spectral::SeriesCheck semiclassical_check(int r, int q, int order, bool raw = false);

}  // namespace hqc::quantum
