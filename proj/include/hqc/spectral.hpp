#pragma once

// Spectral curves  x = y^{1/q} exp(-y^r)  as exact series identities, in the
// single-valued form  y = x^q exp(q y^r).

#include <optional>

#include "hqc/rings.hpp"
#include "hqc/series.hpp"

namespace hqc::spectral {

struct SpectralFamily {
    int r = 1;
    int q = 1;
    int order = 30;

    /// Throws std::invalid_argument unless r, q >= 1 and order >= q.
    static SpectralFamily make(int r, int q, int order);
};

/// y(x) = x^q sum_n (1/r)(n + 1/r)^{n-1} (rq x^{rq})^n / n!, built from
/// (W(z)/z)^{1/r} at z = -rq x^{rq}.
QSeries y_series(const SpectralFamily& family);

/// -(1/q) W(-q x^q), straight from the Lambert series.
QSeries y_series_qdouble(int q, int order);
/// x (W(-r x^r) / (-r x^r))^{1/r}, with the power taken through exp/log.
QSeries y_series_rspin(int r, int order);

struct SeriesCheck {
    bool passed = true;
    /// Lowest exponent where the identity fails.
    std::optional<int> first_failure;
    Rational residual;
};

/// Residual of  y - x^q exp(q y^r)  for a candidate y.
SeriesCheck check_spectral_equation(const SpectralFamily& family, const QSeries& y);
SeriesCheck verify_spectral_equation(const SpectralFamily& family);

/// x dF_{0,1}/dx, with F_{0,1} taken from the closed forms, must equal y(x)
/// through x-degree (n_max r + 1) q.  When `use_hurwitz` is set the Hurwitz
/// numbers h_{0,(d)} / m! are computed and compared as well.
SeriesCheck omega01_match(const SpectralFamily& family, int n_max, bool use_hurwitz = true);

}  // namespace hqc::spectral
