#include "hqc/spectral.hpp"

#include <stdexcept>
#include <string>

#include "hqc/hurwitz.hpp"
#include "hqc/partitions.hpp"

namespace hqc::spectral {

namespace {

SeriesCheck first_nonzero(const QSeries& residual) {
    SeriesCheck check;
    if (auto v = residual.valuation()) {
        check.passed = false;
        check.first_failure = *v;
        check.residual = residual[*v];
    }
    return check;
}

}  // namespace

SpectralFamily SpectralFamily::make(int r, int q, int order) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    if (q < 1) throw std::invalid_argument("q must be at least 1");
    if (order < q) throw std::invalid_argument("order must be at least q = " + std::to_string(q));
    return SpectralFamily{r, q, order};
}

QSeries y_series(const SpectralFamily& family) {
    const int N = family.order;
    const int rq = family.r * family.q;
    const QSeries ratio = w_power_ratio(frac(1, family.r), N);
    const QSeries inner = QSeries::monomial(N, rq, Rational(-rq));
    return compose(ratio, inner).shifted(family.q);
}

QSeries y_series_qdouble(int q, int order) {
    const QSeries w = lambert_w(order);
    const QSeries inner = QSeries::monomial(order, q, Rational(-q));
    return compose(w, inner).scaled(frac(-1, q));
}

QSeries y_series_rspin(int r, int order) {
    const QSeries w_over_z = lambert_w(order + 1).shifted(-1).with_order(order);
    const QSeries root = exp_series(log_series(w_over_z).scaled(frac(1, r)));
    const QSeries inner = QSeries::monomial(order, r, Rational(-r));
    return compose(root, inner).shifted(1);
}

SeriesCheck check_spectral_equation(const SpectralFamily& family, const QSeries& y) {
    if (y.order() != family.order) throw SeriesError("candidate y has the wrong truncation order");
    // the right side has no constant term since q >= 1
    if (sgn(y[0]) != 0) return SeriesCheck{false, 0, y[0]};
    const QSeries rhs = exp_series(power(y, static_cast<unsigned>(family.r)).scaled(family.q)).shifted(family.q);
    return first_nonzero(y - rhs);
}

SeriesCheck verify_spectral_equation(const SpectralFamily& family) {
    return check_spectral_equation(family, y_series(family));
}

SeriesCheck omega01_match(const SpectralFamily& family, int n_max, bool use_hurwitz) {
    if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
    const int r = family.r, q = family.q;
    const int top = (n_max * r + 1) * q;
    const QSeries y = y_series(SpectralFamily{r, q, top});

    QSeries closed(top);
    for (int d = 1; d <= top; ++d) closed[d] = hurwitz::f01_by_part(d, r, q);
    if (auto c = first_nonzero(closed.euler_derivative() - y); !c.passed) return c;

    if (use_hurwitz) {
        QSeries from_numbers(top);
        for (int d = q; d <= top; d += q) {
            const Partition mu{d};
            const int numerator = d / q - 1;
            if (numerator % r != 0) continue;
            const int m = numerator / r;
            from_numbers[d] = hurwitz::connected_vev(m, mu, r, q) / factorial(static_cast<unsigned>(m));
        }
        if (auto c = first_nonzero(from_numbers.euler_derivative() - y); !c.passed) return c;
    }
    return SeriesCheck{};
}

}  // namespace hqc::spectral
