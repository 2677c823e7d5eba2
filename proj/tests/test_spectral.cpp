#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqc/hurwitz.hpp"
#include "hqc/spectral.hpp"

using namespace hqc;
using namespace hqc::spectral;

namespace {

// y(x) by fixed-point iteration of y = x^q exp(q y^r), independent of W.
QSeries y_by_iteration(int r, int q, int order) {
    QSeries y(order);
    for (int i = 0; i <= order; ++i)
        y = exp_series(power(y, static_cast<unsigned>(r)).scaled(q)).shifted(q);
    return y;
}

}  // namespace

TEST_CASE("family validation") {
    CHECK_THROWS_AS(SpectralFamily::make(0, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(SpectralFamily::make(1, 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(SpectralFamily::make(1, 3, 2), std::invalid_argument);
    CHECK(SpectralFamily::make(2, 3, 3).order == 3);
}

TEST_CASE("y series coefficients") {
    const QSeries y11 = y_series(SpectralFamily::make(1, 1, 40));
    for (int n = 1; n <= 40; ++n) CHECK(y11[n] == pow(Rational(n), n - 1) / factorial(static_cast<unsigned>(n)));
    CHECK(y11 == -compose(lambert_w(40), QSeries::variable(40).scaled(-1)));

    const QSeries y12 = y_series(SpectralFamily::make(1, 2, 10));
    CHECK(y12[2] == 1);
    CHECK(y12[4] == 2);
    CHECK(y12[3] == 0);

    for (int r = 1; r <= 3; ++r)
        for (int q = 1; q <= 3; ++q) {
            const QSeries y = y_series(SpectralFamily::make(r, q, 24));
            CHECK(y.valuation() == q);
            CHECK(y[q] == 1);
            CHECK(y == y_by_iteration(r, q, 24));
            // coefficient of x^{q + rqn}: (1/r)(n + 1/r)^{n-1} (rq)^n / n!
            for (int n = 0; q + r * q * n <= 24; ++n) {
                const Rational alpha = frac(1, r);
                CHECK(y[q + r * q * n] == alpha * pow(Rational(n) + alpha, n - 1) * pow(Rational(r * q), n) /
                                              factorial(static_cast<unsigned>(n)));
            }
        }
}

TEST_CASE("power-ratio consistency") {
    const int N = 30;
    const QSeries w_over_z = lambert_w(N + 1).shifted(-1).with_order(N);
    for (int r = 1; r <= 3; ++r)
        for (int q = 1; q <= 3; ++q) {
            const QSeries y = y_series(SpectralFamily::make(r, q, N));
            // dividing by x^q loses the top q coefficients
            const int M = N - q;
            const QSeries lhs = power(y.shifted(-q).with_order(M), static_cast<unsigned>(r));
            const QSeries rhs = compose(w_over_z.with_order(M), QSeries::monomial(M, r * q, Rational(-r * q)));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("literal family constructions agree with the mixed one") {
    for (int q = 1; q <= 3; ++q) CHECK(y_series_qdouble(q, 40) == y_series(SpectralFamily::make(1, q, 40)));
    for (int r = 1; r <= 3; ++r) CHECK(y_series_rspin(r, 40) == y_series(SpectralFamily::make(r, 1, 40)));
}

TEST_CASE("spectral equations") {
    for (int r = 1; r <= 3; ++r)
        for (int q = 1; q <= 3; ++q) {
            CAPTURE(r);
            CAPTURE(q);
            CHECK(verify_spectral_equation(SpectralFamily::make(r, q, 40)).passed);
        }
}

TEST_CASE("perturbed y is rejected at the perturbed coefficient") {
    const auto family = SpectralFamily::make(2, 2, 30);
    const QSeries y = y_series(family);
    for (int k = 0; k <= 30; ++k) {
        QSeries bad = y;
        bad[k] += frac(1, 7);
        const auto check = check_spectral_equation(family, bad);
        CAPTURE(k);
        REQUIRE(!check.passed);
        CHECK(check.first_failure == k);
        CHECK(check.residual == frac(1, 7));
    }
    CHECK_THROWS(check_spectral_equation(family, y.with_order(20)));
}

TEST_CASE("(0,1) free energy reproduces y") {
    for (int r = 1; r <= 3; ++r)
        for (int q = 1; q <= 3; ++q) {
            CAPTURE(r);
            CAPTURE(q);
            CHECK(omega01_match(SpectralFamily::make(r, q, q), 4).passed);
        }
    // x dF/dx for the Lambert curve: n^{n-1}/n!
    for (int n = 1; n <= 8; ++n)
        CHECK(n * hurwitz::f01_by_part(n, 1, 1) == pow(Rational(n), n - 1) / factorial(static_cast<unsigned>(n)));
    for (int n = 0; n <= 5; ++n)
        CHECK((2 * n + 1) * hurwitz::f01_by_part(2 * n + 1, 2, 1) ==
              pow(Rational(2 * n + 1), n - 1) / factorial(static_cast<unsigned>(n)));
}
