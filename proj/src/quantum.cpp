#include "hqc/quantum.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace hqc::quantum {

// ---------------------------------------------------------------------------
// LambdaYPoly

LambdaYPoly::LambdaYPoly(const Rational& constant) { add_term(0, 0, constant); }

LambdaYPoly LambdaYPoly::lambda() {
    LambdaYPoly p;
    p.add_term(1, 0, 1);
    return p;
}

LambdaYPoly LambdaYPoly::y() {
    LambdaYPoly p;
    p.add_term(0, 1, 1);
    return p;
}

void LambdaYPoly::add_term(int i, int j, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = coeffs_.try_emplace({i, j}, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) coeffs_.erase(it);
}

LambdaYPoly& LambdaYPoly::operator+=(const LambdaYPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
    return *this;
}

LambdaYPoly& LambdaYPoly::operator-=(const LambdaYPoly& o) {
    for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, -c);
    return *this;
}

LambdaYPoly operator*(const LambdaYPoly& a, const LambdaYPoly& b) {
    LambdaYPoly out;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

LambdaYPoly operator*(const Rational& c, const LambdaYPoly& a) { return LambdaYPoly(c) * a; }

LambdaYPoly LambdaYPoly::pow(unsigned e) const {
    LambdaYPoly out(1);
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

LambdaPoly LambdaYPoly::at_exponent(const Rational& e) const {
    LambdaPoly out;
    for (const auto& [k, c] : coeffs_) out += LambdaPoly::monomial(c * hqc::pow(e, k.second), k.first + k.second);
    return out;
}

LambdaYPoly LambdaYPoly::divided_by_lambda() const {
    LambdaYPoly out;
    for (const auto& [k, c] : coeffs_) {
        if (k.first == 0) throw std::domain_error("polynomial is not divisible by lambda");
        out.add_term(k.first - 1, k.second, c);
    }
    return out;
}

std::vector<Rational> LambdaYPoly::at_lambda_zero() const {
    std::vector<Rational> out;
    for (const auto& [k, c] : coeffs_) {
        if (k.first != 0) continue;
        if (out.size() <= static_cast<std::size_t>(k.second)) out.resize(static_cast<std::size_t>(k.second) + 1, Rational(0));
        out[static_cast<std::size_t>(k.second)] = c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Operators

Operator& Operator::operator+=(const Operator& o) {
    words_.insert(words_.end(), o.words_.begin(), o.words_.end());
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    for (Word w : o.words_) {
        w.scalar = -w.scalar;
        words_.push_back(std::move(w));
    }
    return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
    Operator out;
    for (const Word& wa : a.words_)
        for (const Word& wb : b.words_) {
            Word w;
            w.scalar = wa.scalar * wb.scalar;
            w.generators = wa.generators;
            w.generators.insert(w.generators.end(), wb.generators.begin(), wb.generators.end());
            out.words_.push_back(std::move(w));
        }
    return out;
}

Operator operator*(const ExpPoly& c, Operator a) {
    for (Word& w : a.words_) w.scalar = c * w.scalar;
    return a;
}

Operator x_hat(HalfInt power) { return Operator(Word{ExpPoly(1), {MulX{power}}}); }
Operator y_hat() { return Operator(Word{ExpPoly(1), {YHat{}}}); }
Operator exp_diag(LambdaYPoly exponent) { return Operator(Word{ExpPoly(1), {ExpDiag{std::move(exponent)}}}); }
Operator scalar(const ExpPoly& c) { return Operator(Word{c, {}}); }

Operator power(const Operator& op, unsigned e) {
    Operator out = scalar(ExpPoly(1));
    for (unsigned i = 0; i < e; ++i) out = out * op;
    return out;
}

// ---------------------------------------------------------------------------
// XSeries and application

XSeries XSeries::monomial(int order, HalfInt exponent, ExpPoly c) {
    XSeries s(order);
    s.add(exponent, c);
    return s;
}

ExpPoly XSeries::coefficient(HalfInt e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? ExpPoly() : it->second;
}

void XSeries::add(HalfInt e, const ExpPoly& c) {
    if (e > HalfInt(order_) || c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

void XSeries::set(HalfInt e, ExpPoly c) {
    coeffs_.erase(e);
    add(e, c);
}

namespace {

using Terms = std::map<HalfInt, ExpPoly>;

Terms apply_generator(const Generator& g, const Terms& in) {
    Terms out;
    if (const auto* mx = std::get_if<MulX>(&g)) {
        for (const auto& [e, c] : in) out.emplace(e + mx->power, c);
    } else if (std::holds_alternative<YHat>(g)) {
        for (const auto& [e, c] : in) {
            ExpPoly v = c * ExpPoly::term(e.to_rational(), 1);
            if (!v.is_zero()) out.emplace(e, std::move(v));
        }
    } else {
        const auto& ed = std::get<ExpDiag>(g);
        for (const auto& [e, c] : in) out.emplace(e, c * ExpPoly::exp(ed.exponent.at_exponent(e.to_rational())));
    }
    return out;
}

}  // namespace

XSeries apply(const Operator& op, const XSeries& f) {
    XSeries out(f.order());
    for (const Word& w : op.words()) {
        Terms current = f.coefficients();
        for (auto it = w.generators.rbegin(); it != w.generators.rend(); ++it) current = apply_generator(*it, current);
        for (const auto& [e, c] : current) out.add(e, w.scalar * c);
    }
    return out;
}

LambdaYPoly diagonal_symbol(const Operator& op) {
    LambdaYPoly total;
    for (const Word& w : op.words()) {
        auto c = w.scalar.as_rational();
        if (!c) throw std::invalid_argument("diagonal_symbol: scalar is not rational");
        // acting on x^e: track the accumulated shift a and the eigenvalue as
        // a polynomial in (lambda, y = lambda e)
        LambdaYPoly value(*c);
        HalfInt shift(0);
        for (auto it = w.generators.rbegin(); it != w.generators.rend(); ++it) {
            if (const auto* mx = std::get_if<MulX>(&*it)) {
                shift += mx->power;
            } else if (std::holds_alternative<YHat>(*it)) {
                value = value * (LambdaYPoly::y() + shift.to_rational() * LambdaYPoly::lambda());
            } else {
                throw std::invalid_argument("diagonal_symbol: exponential generators are not polynomial");
            }
        }
        if (shift != HalfInt(0)) throw std::invalid_argument("diagonal_symbol: word is not diagonal");
        total += value;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Principal specializations

namespace {

// (lambda^r / (r+1)) * ((a - 1/2)^{r+1} - (-1/2)^{r+1}) as a LambdaPoly
LambdaPoly hook_exponent(int r, long a) {
    const Rational value = (hqc::pow(frac(2 * a - 1, 2), r + 1) - hqc::pow(frac(-1, 2), r + 1)) / (r + 1);
    return LambdaPoly::monomial(value, r);
}

void require_family(int r, int q) {
    if (r < 1 || q < 1) throw std::invalid_argument("r and q must be at least 1");
}

}  // namespace

XSeries z_principal(int r, int q, int order) {
    require_family(r, q);
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    XSeries z(order);
    for (int n = 0; q * n <= order; ++n) {
        const Rational c = Rational(1) / (hqc::pow(Rational(q), n) * factorial(static_cast<unsigned>(n)));
        z.add(HalfInt(q * n), ExpPoly::term(c, -n, hook_exponent(r, static_cast<long>(q) * n)));
    }
    return z;
}

XSeries z_principal_qdouble(int q, int order) {
    require_family(1, q);
    XSeries z(order);
    for (int i = 0; i * q <= order; ++i) {
        const Rational c = Rational(1) / (factorial(static_cast<unsigned>(i)) * hqc::pow(Rational(q), i));
        const Rational iq_half = frac(2 * i * q - 1, 2);
        const LambdaPoly exponent = LambdaPoly::monomial((iq_half * iq_half - frac(1, 4)) / 2, 1);
        z.add(HalfInt(i * q), ExpPoly::term(c, -i, exponent));
    }
    return z;
}

XSeries z_principal_rspin(int r, int order) {
    require_family(r, 1);
    XSeries z(order);
    for (int d = 0; d <= order; ++d) {
        const Rational c = Rational(1) / factorial(static_cast<unsigned>(d));
        const Rational value =
            (hqc::pow(frac(2 * d - 1, 2), r + 1) - hqc::pow(frac(-1, 2), r + 1)) / Rational(r + 1);
        z.add(HalfInt(d), ExpPoly::term(c, -d, LambdaPoly::monomial(value, r)));
    }
    return z;
}

// ---------------------------------------------------------------------------
// Operators of the three families

namespace {

const LambdaYPoly kLambda = LambdaYPoly::lambda();
const LambdaYPoly kY = LambdaYPoly::y();

}  // namespace

Operator qdouble_operator(int q) {
    require_family(1, q);
    const ExpPoly prefactor = ExpPoly::exp(LambdaPoly::monomial(frac(q * (q - 1), 2), 1));
    return y_hat() - prefactor * (x_hat(HalfInt(q)) * exp_diag(Rational(q) * kY));
}

Operator rspin_operator(int r) {
    require_family(r, 1);
    const LambdaYPoly half_lambda = frac(1, 2) * kLambda;
    const unsigned e = static_cast<unsigned>(r + 1);
    const LambdaYPoly telescoped =
        frac(1, r + 1) * ((kY + half_lambda).pow(e) - (kY - half_lambda).pow(e)).divided_by_lambda();
    return y_hat() - x_hat(HalfInt(1)) * exp_diag(telescoped);
}

Operator mixed_operator(int r, int q) {
    require_family(r, q);
    const unsigned e = static_cast<unsigned>(r + 1);
    const LambdaYPoly telescoped =
        frac(1, r + 1) * ((kY + Rational(q) * kLambda).pow(e) - kY.pow(e)).divided_by_lambda();
    return y_hat() - x_hat(HalfInt(q) + half(1)) * exp_diag(telescoped) * x_hat(half(-1));
}

Operator quantum_operator(int r, int q) {
    if (r == 1) return qdouble_operator(q);
    if (q == 1) return rspin_operator(r);
    return mixed_operator(r, q);
}

Operator qdouble_operator_raw(int q) {
    require_family(1, q);
    const Rational c = frac(q - 1, 2);
    const Operator conjugated = exp_diag(c * kY) * x_hat(HalfInt(1)) * exp_diag(Rational(-c) * kY);
    return y_hat() - power(conjugated, static_cast<unsigned>(q)) * exp_diag(Rational(q) * kY);
}

namespace {

// sum_{i=0}^r x^{-a} y^i x^a y^{r-i}
Operator conjugated_sum(int r, int a) {
    Operator sum;
    for (int i = 0; i <= r; ++i)
        sum += x_hat(HalfInt(-a)) * power(y_hat(), static_cast<unsigned>(i)) * x_hat(HalfInt(a)) *
               power(y_hat(), static_cast<unsigned>(r - i));
    return sum;
}

}  // namespace

Operator rspin_operator_raw(int r) {
    require_family(r, 1);
    const Operator exponent = scalar(ExpPoly(frac(1, r + 1))) * conjugated_sum(r, 1);
    return y_hat() - x_hat(half(3)) * exp_diag(diagonal_symbol(exponent)) * x_hat(half(-1));
}

Operator mixed_operator_raw(int r, int q) {
    require_family(r, q);
    const Operator exponent = scalar(ExpPoly(frac(q, r + 1))) * conjugated_sum(r, q);
    return y_hat() - x_hat(HalfInt(q) + half(1)) * exp_diag(diagonal_symbol(exponent)) * x_hat(half(-1));
}

Operator quantum_operator_raw(int r, int q) {
    if (r == 1) return qdouble_operator_raw(q);
    if (q == 1) return rspin_operator_raw(r);
    return mixed_operator_raw(r, q);
}

std::optional<HalfInt> first_disagreement(const Operator& a, const Operator& b, const std::vector<HalfInt>& exponents) {
    for (HalfInt e : exponents) {
        // room above e for the largest shift of either operator
        const int order = static_cast<int>(e.twice() / 2) + 64;
        const XSeries x = XSeries::monomial(order, e);
        if (!(apply(a, x) == apply(b, x))) return e;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verification

AnnihilationCheck check_annihilation(const Operator& op, const XSeries& z, int max_exponent) {
    AnnihilationCheck check;
    for (const auto& [e, c] : apply(op, z).coefficients()) {
        if (e > HalfInt(max_exponent)) break;
        if (!expoly_is_zero(c)) {
            check.passed = false;
            check.exponent = e;
            check.residual = c;
            return check;
        }
    }
    return check;
}

AnnihilationCheck verify_annihilation(int r, int q, int order, bool raw) {
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    const Operator op = raw ? quantum_operator_raw(r, q) : quantum_operator(r, q);
    return check_annihilation(op, z_principal(r, q, order), order);
}

namespace {

RecurrenceCheck check_steps(const XSeries& z, int q, int d_max,
                            const std::function<ExpPoly(int)>& lhs_factor,
                            const std::function<ExpPoly(int)>& rhs_factor) {
    RecurrenceCheck check;
    if (!(z.coefficient(HalfInt(0)) == ExpPoly(1))) {
        check.passed = false;
        check.first_failure = 0;
        return check;
    }
    if (z.order() < q * d_max) throw std::invalid_argument("series too short for the requested recurrence range");
    for (int d = 0; d < d_max; ++d) {
        const ExpPoly lhs = lhs_factor(d) * z.coefficient(HalfInt(q * (d + 1)));
        const ExpPoly rhs = rhs_factor(d) * z.coefficient(HalfInt(q * d));
        if (!(lhs == rhs)) {
            check.passed = false;
            check.first_failure = d;
            return check;
        }
    }
    return check;
}

}  // namespace

RecurrenceCheck check_recurrence_qdouble(int q, const XSeries& z, int d_max) {
    return check_steps(
        z, q, d_max, [q](int i) { return ExpPoly::term(Rational(q * (i + 1)), 1); },
        [q](int i) {
            const Rational rate = frac(q * (q - 1), 2) + Rational(i * q * q);
            return ExpPoly::exp(LambdaPoly::monomial(rate, 1));
        });
}

RecurrenceCheck check_recurrence_rspin(int r, const XSeries& z, int d_max) {
    return check_steps(
        z, 1, d_max, [](int d) { return ExpPoly::term(Rational(d + 1), 1); },
        [r](int d) {
            const Rational value =
                (hqc::pow(frac(2 * d + 1, 2), r + 1) - hqc::pow(frac(2 * d - 1, 2), r + 1)) / (r + 1);
            return ExpPoly::exp(LambdaPoly::monomial(value, r));
        });
}

RecurrenceCheck check_recurrence_mixed(int r, int q, const XSeries& z, int d_max) {
    return check_steps(
        z, q, d_max, [q](int n) { return ExpPoly::term(Rational(q * (n + 1)), 1); },
        [r, q](int n) {
            const Rational value = (hqc::pow(frac(2 * q * (n + 1) - 1, 2), r + 1) -
                                    hqc::pow(frac(2 * q * n - 1, 2), r + 1)) /
                                   (r + 1);
            return ExpPoly::exp(LambdaPoly::monomial(value, r));
        });
}

RecurrenceCheck verify_recurrence(int r, int q, int d_max) {
    if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
    const XSeries z = z_principal(r, q, q * d_max);
    if (auto c = check_recurrence_mixed(r, q, z, d_max); !c.passed) return c;
    if (r == 1)
        if (auto c = check_recurrence_qdouble(q, z, d_max); !c.passed) return c;
    if (q == 1)
        if (auto c = check_recurrence_rspin(r, z, d_max); !c.passed) return c;
    return {};
}

spectral::SeriesCheck check_semiclassical(const Operator& op, const QSeries& y) {
    const int N = y.order();
    QSeries total(N);
    for (const Word& w : op.words()) {
        auto c = w.scalar.limit_at_zero();
        if (!c) throw std::invalid_argument("semiclassical limit of a scalar prefactor does not exist");
        HalfInt x_power(0);
        QSeries product = QSeries::constant(N, *c);
        LambdaYPoly exponent;
        for (const Generator& g : w.generators) {
            if (const auto* mx = std::get_if<MulX>(&g))
                x_power += mx->power;
            else if (std::holds_alternative<YHat>(g))
                product = product * y;
            else
                exponent += std::get<ExpDiag>(g).exponent;
        }
        const std::vector<Rational> symbol = exponent.at_lambda_zero();
        if (!symbol.empty()) {
            if (sgn(symbol[0]) != 0) throw std::invalid_argument("exponential symbol has a transcendental constant");
            QSeries outer(N, symbol);
            product = product * exp_series(compose(outer, y));
        }
        if (!x_power.is_integer()) throw std::invalid_argument("symbol has a fractional net power of x");
        total += product.shifted(static_cast<int>(x_power.as_integer()));
    }
    spectral::SeriesCheck check;
    if (auto v = total.valuation()) {
        check.passed = false;
        check.first_failure = *v;
        check.residual = total[*v];
    }
    return check;
}

spectral::SeriesCheck semiclassical_check(int r, int q, int order, bool raw) {
    const auto family = spectral::SpectralFamily::make(r, q, order);
    const Operator op = raw ? quantum_operator_raw(r, q) : quantum_operator(r, q);
    return check_semiclassical(op, spectral::y_series(family));
}

}  // namespace hqc::quantum
