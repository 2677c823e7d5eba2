#include "hqc/hurwitz.hpp"

#include <map>
#include <string>
#include <tuple>

#include "hqc/fock.hpp"

namespace hqc::hurwitz {

namespace {

using MemoKey = std::tuple<int, std::vector<int>, int, int>;

void require_family(int r, int q) {
    if (r < 1) throw ParameterError("r must be at least 1");
    if (q < 1) throw ParameterError("q must be at least 1");
}

Rational part_product(const Partition& mu) {
    Rational p = 1;
    for (int part : mu.parts()) p *= part;
    return p;
}

Rational infinity_normalization(int q, int s) { return pow(Rational(q), s) * factorial(static_cast<unsigned>(s)); }

Partition uniform_partition(int q, int s) { return Partition(std::vector<int>(static_cast<std::size_t>(s), q)); }

}  // namespace

HurwitzParams HurwitzParams::make(int r, int q, int g, Partition mu) {
    require_family(r, q);
    if (g < 0) throw ParameterError("genus must be nonnegative");
    if (mu.empty()) throw ParameterError("mu must have at least one part");
    if (mu.size() % q != 0)
        throw ParameterError("q divides |mu| violated: q = " + std::to_string(q) + ", |mu| = " + std::to_string(mu.size()));
    HurwitzParams p;
    p.r = r;
    p.q = q;
    p.g = g;
    p.s = mu.size() / q;
    p.ell = mu.length();
    const int numerator = 2 * g - 2 + p.ell + p.s;
    if (numerator < 0 || numerator % r != 0)
        throw ParameterError("Riemann-Hurwitz integrality violated: m = (2g - 2 + l(mu) + s)/r = " +
                             std::to_string(numerator) + "/" + std::to_string(r) + " is not a nonnegative integer");
    p.m = numerator / r;
    p.mu = std::move(mu);
    return p;
}

std::optional<int> genus_for(int m, const Partition& mu, int r, int q) {
    if (m < 0 || mu.size() % q != 0) return std::nullopt;
    const int twice_g = m * r + 2 - mu.length() - mu.size() / q;
    if (twice_g < 0 || twice_g % 2 != 0) return std::nullopt;
    return twice_g / 2;
}

Rational completed_cycle_eigenvalue(const Partition& lambda, int r) {
    return fock::shifted_power_sum(lambda, r + 1) / (r + 1);
}

Rational disconnected_vev(int m, const Partition& mu, int r, int q) {
    require_family(r, q);
    if (m < 0) throw ParameterError("m must be nonnegative");
    if (mu.size() % q != 0) return 0;
    thread_local std::map<MemoKey, Rational> memo;
    MemoKey key{m, mu.parts(), r, q};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int s = mu.size() / q;
    const Partition infinity = uniform_partition(q, s);
    Rational sum = 0;
    for (const auto& [lambda, chi_mu] : character_column(mu)) {
        const Integer chi_inf = character(lambda, infinity);
        if (sgn(chi_inf) == 0) continue;
        sum += Rational(chi_mu * chi_inf) * pow(completed_cycle_eigenvalue(lambda, r), m);
    }
    Rational value = sum / (part_product(mu) * infinity_normalization(q, s));
    memo.emplace(std::move(key), value);
    return value;
}

Rational disconnected_vev_fock(int m, const Partition& mu, int r, int q) {
    require_family(r, q);
    if (m < 0) throw ParameterError("m must be nonnegative");
    if (mu.size() % q != 0) return 0;
    const int s = mu.size() / q;
    fock::QVector v = fock::vacuum_vector();
    for (int i = 0; i < s; ++i) v = fock::alpha(-q, v);
    const Rational r_factorial = factorial(static_cast<unsigned>(r));
    for (int i = 0; i < m; ++i) {
        fock::QVector next;
        for (const auto& [state, c] : fock::e_tilde_coefficient(0, r + 1, v).terms) next.add(state, c * r_factorial);
        v = std::move(next);
    }
    for (int part : mu.parts()) v = fock::alpha(part, v);
    return fock::vev(v) / (part_product(mu) * infinity_normalization(q, s));
}

Rational connected_from_disconnected(int m, const Partition& mu, const DisconnectedFn& disconnected) {
    const int ell = mu.length();
    if (ell == 0) return 0;
    Rational value = disconnected(m, mu);
    if (ell == 1) return value;
    const auto& parts = mu.parts();
    // blocks B containing part 0; bit i of `mask` marks parts 1..ell-1
    const unsigned full = (1u << (ell - 1)) - 1;
    for (unsigned mask = 0; mask < full; ++mask) {
        std::vector<int> block{parts[0]}, rest;
        for (int i = 1; i < ell; ++i) {
            if (mask & (1u << (i - 1)))
                block.push_back(parts[static_cast<std::size_t>(i)]);
            else
                rest.push_back(parts[static_cast<std::size_t>(i)]);
        }
        const Partition b = Partition::from_unsorted(block);
        const Partition c = Partition::from_unsorted(rest);
        for (int j = 0; j <= m; ++j) {
            const Rational dc = disconnected(m - j, c);
            if (sgn(dc) == 0) continue;
            const Rational cb = connected_from_disconnected(j, b, disconnected);
            if (sgn(cb) == 0) continue;
            value -= binomial(static_cast<unsigned>(m), static_cast<unsigned>(j)) * cb * dc;
        }
    }
    return value;
}

Rational connected_vev(int m, const Partition& mu, int r, int q) {
    require_family(r, q);
    thread_local std::map<MemoKey, Rational> memo;
    MemoKey key{m, mu.parts(), r, q};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational value = connected_from_disconnected(
        m, mu, [r, q](int mm, const Partition& nu) { return disconnected_vev(mm, nu, r, q); });
    memo.emplace(std::move(key), value);
    return value;
}

Rational connected_vev_fock(int m, const Partition& mu, int r, int q) {
    require_family(r, q);
    return connected_from_disconnected(
        m, mu, [r, q](int mm, const Partition& nu) { return disconnected_vev_fock(mm, nu, r, q); });
}

HurwitzValue connected_hurwitz(const HurwitzParams& params) {
    return HurwitzValue{params, connected_vev(params.m, params.mu, params.r, params.q)};
}

F01Term f01_qdouble(int n, int q) {
    if (n < 1) throw ParameterError("q-double (0,1) index starts at n = 1");
    require_family(1, q);
    const int part = n * q;
    return F01Term{part, pow(Rational(part), n - 2) / factorial(static_cast<unsigned>(n))};
}

F01Term f01_rspin(int n, int r) {
    if (n < 0) throw ParameterError("r-spin (0,1) index starts at n = 0");
    require_family(r, 1);
    const int part = r * n + 1;
    return F01Term{part, pow(Rational(part), n - 2) / factorial(static_cast<unsigned>(n))};
}

F01Term f01_mixed(int n, int r, int q) {
    if (n < 0) throw ParameterError("mixed (0,1) index starts at n = 0");
    require_family(r, q);
    const int part = (n * r + 1) * q;
    return F01Term{part, Rational(q) * pow(Rational(part), n - 2) / factorial(static_cast<unsigned>(n))};
}

F01Term f01_coefficient(int n, int r, int q) {
    if (r == 1) return f01_qdouble(n, q);
    if (q == 1) return f01_rspin(n, r);
    return f01_mixed(n, r, q);
}

Rational f01_by_part(int d, int r, int q) {
    require_family(r, q);
    if (d < 1 || d % q != 0) return 0;
    const int s = d / q;
    if ((s - 1) % r != 0) return 0;
    return f01_mixed((s - 1) / r, r, q).coefficient;
}

MultiSeries log_z_oracle(int max_weight, int max_t, int r, int q) {
    require_family(r, q);
    MultiSeries z(max_weight, max_t);
    for (int d = 0; d <= max_weight; d += q) {
        const int s = d / q;
        const Partition infinity = uniform_partition(q, s);
        const Rational inf_norm = infinity_normalization(q, s);
        const auto cycle_types = partitions_of(d);
        for (const Partition& lambda : partitions_of(d)) {
            const Integer chi_inf = character(lambda, infinity);
            if (sgn(chi_inf) == 0) continue;
            const Rational weight = Rational(chi_inf) / inf_norm;
            const Rational eigen = completed_cycle_eigenvalue(lambda, r);
            for (const Partition& mu : cycle_types) {
                const Integer chi_mu = character(lambda, mu);
                if (sgn(chi_mu) == 0) continue;
                const Rational schur = Rational(chi_mu) / z_factor(mu);
                for (int j = 0; j <= max_t; ++j)
                    z.add_term(Monomial::from(mu, j),
                               schur * weight * pow(eigen, j) / factorial(static_cast<unsigned>(j)));
            }
        }
    }
    return multiseries_log(z);
}

Rational log_z_connected(const MultiSeries& log_z, int m, const Partition& mu) {
    return log_z.coefficient(mu, m) * factorial(static_cast<unsigned>(m)) * automorphism_factor(mu);
}

}  // namespace hqc::hurwitz
