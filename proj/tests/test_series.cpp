#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hqc/multiseries.hpp"
#include "hqc/series.hpp"

using namespace hqc;

namespace {

QSeries random_series(std::mt19937& rng, int order, bool zero_constant) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    QSeries s(order);
    for (int n = zero_constant ? 1 : 0; n <= order; ++n) s[n] = frac(num(rng), den(rng));
    return s;
}

// W by the fixed point W = z exp(-W), independent of the closed form.
QSeries lambert_by_iteration(int order) {
    QSeries w(order);
    const QSeries z = QSeries::variable(order);
    for (int i = 0; i <= order; ++i) w = z * exp_series(-w);
    return w;
}

}  // namespace

TEST_CASE("arithmetic and truncation") {
    const QSeries x = QSeries::variable(5);
    const QSeries one_minus_x = QSeries::constant(5, 1) - x;
    const QSeries geometric = inverse(one_minus_x);
    for (int n = 0; n <= 5; ++n) CHECK(geometric[n] == 1);
    CHECK(power(x, 6).is_zero());
    CHECK(x.shifted(2)[3] == 1);
    CHECK(x.shifted(-1)[0] == 1);
    CHECK_THROWS_AS(QSeries::constant(3, 1).shifted(-1), SeriesError);
    CHECK_THROWS_AS(x + QSeries::variable(4), SeriesError);
    CHECK_THROWS_AS(inverse(x), SeriesError);
    CHECK_THROWS_AS(log_series(QSeries::constant(3, 2)), SeriesError);
    CHECK_THROWS_AS(exp_series(QSeries::constant(3, 1)), SeriesError);
    CHECK(x.euler_derivative() == x);
    CHECK(power(x, 3).euler_derivative() == power(x, 3).scaled(3));
    CHECK(x.valuation() == 1);
    CHECK(!QSeries(4).valuation());
}

TEST_CASE("exp coefficients are 1/n!") {
    const QSeries e = exp_series(QSeries::variable(20));
    for (int n = 0; n <= 20; ++n) CHECK(e[n] == 1 / factorial(static_cast<unsigned>(n)));
}

TEST_CASE("exp(a) exp(b) = exp(a+b) against the binomial convolution") {
    // exp(a x) exp(b x) has coefficients sum_k C(n,k) a^k b^{n-k} / n!
    const Rational a = frac(2, 3), b = frac(-5, 7);
    const int N = 15;
    const QSeries prod = exp_series(QSeries::variable(N).scaled(a)) * exp_series(QSeries::variable(N).scaled(b));
    for (int n = 0; n <= N; ++n) {
        Rational expected = 0;
        for (int k = 0; k <= n; ++k)
            expected += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * pow(a, k) * pow(b, n - k);
        CHECK(prod[n] == expected / factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("series properties") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        CAPTURE(trial);
        const int N = 12;
        const QSeries f = random_series(rng, N, true), g = random_series(rng, N, true);
        const QSeries u = QSeries::constant(N, 1) + random_series(rng, N, true);
        CHECK(log_series(exp_series(f)) == f);
        CHECK(exp_series(log_series(u)) == u);
        CHECK(exp_series(f + g) == exp_series(f) * exp_series(g));
        CHECK(u * inverse(u) == QSeries::constant(N, 1));
        CHECK(power(u, 3) == u * u * u);
        // composition is associative and respects products
        const QSeries h = random_series(rng, N, true);
        CHECK(compose(compose(u, f), g) == compose(u, compose(f, g)));
        CHECK(compose(u * h, f) == compose(u, f) * compose(h, f));
    }
}

TEST_CASE("Lambert W") {
    const int N = 60;
    const QSeries w = lambert_w(N);
    CHECK(w == lambert_by_iteration(N));
    CHECK(w * exp_series(w) == QSeries::variable(N));
    CHECK(w[1] == 1);
    CHECK(w[2] == -1);
    CHECK(w[3] == frac(3, 2));
    CHECK_THROWS(lambert_w(0));
}

TEST_CASE("powers of W(x)/x") {
    const int N = 20;
    const QSeries ratio = lambert_w(N + 1).shifted(-1).with_order(N);
    for (Rational alpha : {Rational(1), Rational(2), frac(1, 2), frac(1, 3), frac(-2, 5)}) {
        CAPTURE(to_string(alpha));
        CHECK(w_power_ratio(alpha, N) == exp_series(log_series(ratio).scaled(alpha)));
    }
    CHECK_THROWS(w_power_ratio(0, 5));
}

TEST_CASE("zeta series") {
    const int N = 14;
    const QSeries z_over = zeta_over_z(N);
    // e^{z/2} - e^{-z/2} = sum_{odd n} 2 (1/2)^n z^n / n!
    for (int n = 0; n <= N; ++n) {
        const Rational expected = (n % 2 == 0) ? 2 * pow(frac(1, 2), n + 1) / factorial(static_cast<unsigned>(n + 1)) : Rational(0);
        CHECK(z_over[n] == expected);
    }
    CHECK(z_over * inverse_zeta_times_z(N) == QSeries::constant(N, 1));
    for (long k : {-3L, -1L, 0L, 2L, 3L}) {
        CAPTURE(k);
        // zeta(ku)/zeta(u) = k (zeta(ku)/(ku)) / (zeta(u)/u)
        const QSeries scaled = compose(zeta_over_z(N), QSeries::variable(N).scaled(Rational(k)));
        CHECK(zeta_ratio(k, N) == (scaled * inverse_zeta_times_z(N)).scaled(Rational(k)));
    }
}

TEST_CASE("multivariate log and exp") {
    const Partition p1{1}, p2{2}, p11{1, 1};
    MultiSeries z = MultiSeries::one(4, 2);
    z.add_term(Monomial::from(p1, 0), 1);
    z.add_term(Monomial::from(p11, 0), frac(1, 2));
    z.add_term(Monomial::from(p2, 1), 3);
    const MultiSeries log_z = multiseries_log(z);
    CHECK(multiseries_exp(log_z) == z);
    CHECK(log_z.coefficient(p1, 0) == 1);
    CHECK(log_z.coefficient(p11, 0) == 0);
    CHECK(log_z.coefficient(p2, 1) == 3);
    CHECK(log_z.coefficient(Partition{2, 1}, 1) == -3);
    // out-of-range monomials are dropped
    MultiSeries small(2, 1);
    small.add_term(Monomial::from(Partition{3}, 0), 1);
    small.add_term(Monomial::from(p1, 2), 1);
    CHECK(small == MultiSeries(2, 1));
    CHECK(Monomial::from(Partition{3, 1, 1}, 2).weight() == 5);
}
