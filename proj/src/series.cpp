#include "hqc/series.hpp"

namespace hqc {

QSeries lambert_w(int order) {
    if (order < 1) throw SeriesError("lambert_w: order must be at least 1");
    QSeries w(order);
    for (int n = 1; n <= order; ++n) {
        Rational c = pow(Rational(n), n - 1) / factorial(static_cast<unsigned>(n));
        w[n] = (n % 2 == 1) ? c : Rational(-c);
    }
    return w;
}

QSeries w_power_ratio(const Rational& alpha, int order) {
    if (sgn(alpha) == 0) throw SeriesError("w_power_ratio: alpha must be nonzero");
    QSeries s(order);
    for (int n = 0; n <= order; ++n) {
        Rational c = alpha * pow(Rational(n + alpha), n - 1) / factorial(static_cast<unsigned>(n));
        s[n] = (n % 2 == 0) ? c : Rational(-c);
    }
    return s;
}

QSeries zeta_over_z(int order) {
    QSeries s(order);
    for (int i = 0; 2 * i <= order; ++i)
        s[2 * i] = Rational(1) / (pow(Rational(2), 2 * i) * factorial(static_cast<unsigned>(2 * i + 1)));
    return s;
}

QSeries inverse_zeta_times_z(int order) { return inverse(zeta_over_z(order)); }

QSeries zeta_ratio(long k, int order) {
    QSeries numerator(order);
    for (int i = 0; 2 * i <= order; ++i)
        numerator[2 * i] = pow(Rational(k), 2 * i + 1) /
                           (pow(Rational(2), 2 * i) * factorial(static_cast<unsigned>(2 * i + 1)));
    return numerator * inverse_zeta_times_z(order);
}

}  // namespace hqc
