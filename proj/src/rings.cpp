#include "hqc/rings.hpp"

#include <sstream>

namespace hqc {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        const bool ok = (c >= '0' && c <= '9') || c == '/' || (i == 0 && (c == '-' || c == '+'));
        if (!ok) throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (s.front() == '+') s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent == 0) return 1;
    if (exponent < 0) {
        if (sgn(base) == 0) throw std::domain_error("zero raised to a negative power");
        return pow(Rational(1 / base), -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational out(num, den);
    out.canonicalize();
    return out;
}

Rational factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Rational frac(long p, long q) {
    if (q == 0) throw std::domain_error("zero denominator");
    Rational out(p, q);
    out.canonicalize();
    return out;
}

int cmp(const Rational& a, const Rational& b) { return ::cmp(a, b); }

HalfInt HalfInt::from_rational(const Rational& r) {
    Rational doubled = r * 2;
    if (doubled.get_den() != 1 || !doubled.get_num().fits_slong_p())
        throw std::domain_error("value is not on the half-integer grid: " + hqc::to_string(r));
    return from_twice(doubled.get_num().get_si());
}

std::string to_string(HalfInt h) {
    if (h.is_integer()) return std::to_string(h.as_integer());
    return std::to_string(h.twice()) + "/2";
}

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << to_string(h); }

// ---------------------------------------------------------------------------
// LambdaPoly

LambdaPoly::LambdaPoly(const Rational& constant) { set(0, constant); }

LambdaPoly LambdaPoly::monomial(const Rational& c, int degree) {
    if (degree < 0) throw std::domain_error("negative lambda degree in a polynomial");
    LambdaPoly p;
    p.set(degree, c);
    return p;
}

void LambdaPoly::set(int degree, Rational c) {
    if (sgn(c) == 0)
        coeffs_.erase(degree);
    else
        coeffs_[degree] = std::move(c);
}

int LambdaPoly::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

Rational LambdaPoly::coefficient(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    for (const auto& [d, c] : o.coeffs_) set(d, coefficient(d) + c);
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
    for (const auto& [d, c] : o.coeffs_) set(d, coefficient(d) - c);
    return *this;
}

LambdaPoly& LambdaPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [d, v] : coeffs_) v *= c;
    return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly out;
    for (const auto& [da, ca] : a.coeffs_)
        for (const auto& [db, cb] : b.coeffs_) out.set(da + db, out.coefficient(da + db) + ca * cb);
    return out;
}

std::strong_ordering operator<=>(const LambdaPoly& a, const LambdaPoly& b) {
    auto ia = a.coeffs_.begin();
    auto ib = b.coeffs_.begin();
    for (; ia != a.coeffs_.end() && ib != b.coeffs_.end(); ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0) return c;
        if (int c = cmp(ia->second, ib->second); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (ia == a.coeffs_.end() && ib == b.coeffs_.end()) return std::strong_ordering::equal;
    return ia == a.coeffs_.end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string LambdaPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational mag = abs(c);
        if (d == 0) {
            os << hqc::to_string(mag);
        } else {
            if (mag != 1) os << hqc::to_string(mag) << "*";
            os << "L";
            if (d != 1) os << "^" << d;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// ExpPoly

ExpPoly::ExpPoly(const Rational& c) { accumulate(Key{}, c); }

ExpPoly ExpPoly::term(const Rational& c, int lambda_power, LambdaPoly exponent) {
    ExpPoly e;
    e.accumulate(Key{lambda_power, std::move(exponent)}, c);
    return e;
}

ExpPoly ExpPoly::canonical(const std::vector<Term>& terms) {
    ExpPoly e;
    for (const auto& t : terms) e.accumulate(Key{t.lambda_power, t.exponent}, t.coefficient);
    return e;
}

void ExpPoly::accumulate(const Key& key, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

std::vector<ExpPoly::Term> ExpPoly::terms() const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.push_back(Term{c, k.lambda_power, k.exponent});
    return out;
}

std::optional<ExpPoly> ExpPoly::inverse() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [k, c] = *terms_.begin();
    return term(Rational(1 / c), -k.lambda_power, -k.exponent);
}

std::optional<Rational> ExpPoly::limit_at_zero() const {
    Rational value = 0;
    for (const auto& [k, c] : terms_) {
        if (k.lambda_power < 0) return std::nullopt;
        if (k.lambda_power > 0) continue;
        if (sgn(k.exponent.constant_term()) != 0) return std::nullopt;
        value += c;
    }
    return value;
}

std::optional<Rational> ExpPoly::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1) return std::nullopt;
    const auto& [k, c] = *terms_.begin();
    if (k.lambda_power != 0 || !k.exponent.is_zero()) return std::nullopt;
    return c;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
    for (const auto& [k, c] : o.terms_) accumulate(k, c);
    return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
    for (const auto& [k, c] : o.terms_) accumulate(k, -c);
    return *this;
}

ExpPoly& ExpPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.accumulate(ExpPoly::Key{ka.lambda_power + kb.lambda_power, ka.exponent + kb.exponent}, ca * cb);
    return out;
}

std::string ExpPoly::to_string() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << ", ";
        first = false;
        os << hqc::to_string(c);
        if (k.lambda_power != 0) os << "*L^" << k.lambda_power;
        os << "*exp(" << k.exponent.to_string() << ")";
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExpPoly& e) { return os << e.to_string(); }

ExpPoly expoly_add(const ExpPoly& a, const ExpPoly& b) { return a + b; }
ExpPoly expoly_mul(const ExpPoly& a, const ExpPoly& b) { return a * b; }
bool expoly_is_zero(const ExpPoly& a) { return a.is_zero(); }

}  // namespace hqc
