#include "hqc/fock.hpp"

#include <algorithm>
#include <functional>

namespace hqc::fock {

namespace {

constexpr HalfInt kHalf = half(1);

void require_half_odd(HalfInt k) {
    if (k.is_integer()) throw std::domain_error("wedge positions are half-odd integers, got " + to_string(k));
}

}  // namespace

MayaState MayaState::vacuum(int charge) {
    MayaState s;
    s.sea_ = HalfInt(charge) - kHalf;
    return s;
}

MayaState MayaState::from_partition(const Partition& lambda) {
    std::vector<HalfInt> positions;
    for (int i = 1; i <= lambda.length(); ++i) positions.push_back(HalfInt(lambda.part(i - 1) - i) + kHalf);
    return from_positions(HalfInt(-lambda.length()) - kHalf, std::move(positions));
}

MayaState MayaState::from_positions(HalfInt sea, std::vector<HalfInt> occupied_above) {
    require_half_odd(sea);
    MayaState s;
    s.sea_ = sea;
    std::sort(occupied_above.begin(), occupied_above.end(), std::greater<>());
    for (std::size_t i = 0; i < occupied_above.size(); ++i) {
        require_half_odd(occupied_above[i]);
        if (occupied_above[i] <= sea) throw std::invalid_argument("occupied position below the sea level");
        if (i > 0 && occupied_above[i] == occupied_above[i - 1]) throw std::invalid_argument("repeated position");
    }
    s.above_ = std::move(occupied_above);
    s.canonicalize();
    return s;
}

void MayaState::canonicalize() {
    while (!above_.empty() && above_.back() == sea_ + 1) {
        above_.pop_back();
        sea_ += 1;
    }
}

int MayaState::charge() const {
    return static_cast<int>((sea_ + kHalf).as_integer() + static_cast<long long>(above_.size()));
}

bool MayaState::occupied(HalfInt k) const {
    if (k <= sea_) return true;
    return std::find(above_.begin(), above_.end(), k) != above_.end();
}

long long MayaState::count_above(HalfInt k) const {
    long long count = 0;
    for (HalfInt a : above_)
        if (a > k) ++count;
    if (k < sea_) count += (sea_ - k).as_integer();
    return count;
}

std::optional<Partition> MayaState::to_partition() const {
    if (charge() != 0) return std::nullopt;
    std::vector<int> parts;
    for (std::size_t i = 0; i < above_.size(); ++i) {
        const HalfInt p = above_[i] + HalfInt(static_cast<long long>(i) + 1) - kHalf;
        parts.push_back(static_cast<int>(p.as_integer()));
    }
    return Partition(std::move(parts));
}

std::optional<std::pair<MayaState, int>> MayaState::inserted(HalfInt k) const {
    require_half_odd(k);
    if (occupied(k)) return std::nullopt;
    const int sign = count_above(k) % 2 == 0 ? 1 : -1;
    MayaState s = *this;
    s.above_.insert(std::upper_bound(s.above_.begin(), s.above_.end(), k, std::greater<>()), k);
    s.canonicalize();
    return std::make_pair(std::move(s), sign);
}

std::optional<std::pair<MayaState, int>> MayaState::removed(HalfInt k) const {
    require_half_odd(k);
    if (!occupied(k)) return std::nullopt;
    const int sign = count_above(k) % 2 == 0 ? 1 : -1;
    MayaState s = *this;
    if (k > sea_) {
        s.above_.erase(std::find(s.above_.begin(), s.above_.end(), k));
    } else {
        for (HalfInt p = sea_; p > k; p -= 1) s.above_.push_back(p);
        s.sea_ = k - 1;
    }
    s.canonicalize();
    return std::make_pair(std::move(s), sign);
}

std::optional<std::pair<MayaState, int>> normal_ordered(HalfInt i, HalfInt j, const MayaState& s) {
    if (j > HalfInt(0)) {
        auto first = s.removed(j);
        if (!first) return std::nullopt;
        auto second = first->first.inserted(i);
        if (!second) return std::nullopt;
        return std::make_pair(std::move(second->first), first->second * second->second);
    }
    auto first = s.inserted(i);
    if (!first) return std::nullopt;
    auto second = first->first.removed(j);
    if (!second) return std::nullopt;
    return std::make_pair(std::move(second->first), -first->second * second->second);
}

std::vector<Image> e_operator_images(int n, const MayaState& s) {
    const HalfInt shift(n);
    const HalfInt reach(n < 0 ? -n : n);
    const HalfInt lo = std::min(s.sea() + 1, kHalf) - reach;
    const HalfInt hi = std::max(s.highest_occupied(), kHalf) + reach;
    std::vector<Image> out;
    for (HalfInt k = lo; k <= hi; k += 1) {
        if (auto img = normal_ordered(k - shift, k, s))
            out.push_back(Image{std::move(img->first), img->second, k - HalfInt::from_twice(n)});
    }
    return out;
}

namespace {

QVector apply_pairs(const QVector& v, const std::function<std::optional<std::pair<MayaState, int>>(const MayaState&)>& op) {
    QVector out;
    for (const auto& [s, c] : v.terms)
        if (auto img = op(s)) out.add(img->first, img->second > 0 ? c : Rational(-c));
    return out;
}

}  // namespace

QVector psi(HalfInt k, const QVector& v) {
    return apply_pairs(v, [k](const MayaState& s) { return s.inserted(k); });
}

QVector psi_star(HalfInt k, const QVector& v) {
    return apply_pairs(v, [k](const MayaState& s) { return s.removed(k); });
}

QVector alpha(int n, const QVector& v) {
    if (n == 0) throw std::invalid_argument("alpha_0 is not defined; use e_tilde_coefficient(0, ...)");
    QVector out;
    for (const auto& [s, c] : v.terms)
        for (const auto& img : e_operator_images(n, s)) out.add(img.state, img.sign > 0 ? c : Rational(-c));
    return out;
}

QVector e_tilde_coefficient(int n, int j, const QVector& v) {
    if (j < 0) throw std::invalid_argument("negative z-degree");
    const Rational inv_fact = Rational(1) / factorial(static_cast<unsigned>(j));
    QVector out;
    for (const auto& [s, c] : v.terms)
        for (const auto& img : e_operator_images(n, s)) {
            const Rational weight = pow(img.energy_shift.to_rational(), j) * inv_fact * img.sign;
            out.add(img.state, c * weight);
        }
    return out;
}

FockVector<QSeries> e_tilde(int n, const QVector& v, int z_order) {
    FockVector<QSeries> out;
    for (const auto& [s, c] : v.terms)
        for (const auto& img : e_operator_images(n, s)) {
            // c * sign * exp(z * shift)
            QSeries e(z_order);
            const Rational shift = img.energy_shift.to_rational();
            for (int j = 0; j <= z_order; ++j)
                e[j] = c * img.sign * pow(shift, j) / factorial(static_cast<unsigned>(j));
            out.add(img.state, e);
        }
    return out;
}

Rational vev(const QVector& v) {
    auto it = v.terms.find(MayaState::vacuum());
    return it == v.terms.end() ? Rational(0) : it->second;
}

Rational inner(const QVector& a, const QVector& b) {
    Rational sum = 0;
    for (const auto& [s, c] : a.terms)
        if (auto it = b.terms.find(s); it != b.terms.end()) sum += c * it->second;
    return sum;
}

Rational shifted_power_sum(const Partition& lambda, int j) {
    if (j < 1) throw std::invalid_argument("shifted_power_sum: j must be positive");
    Rational sum = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        const Rational vacuum_pos = frac(1, 2) - i;
        sum += pow(Rational(lambda.part(i - 1) + vacuum_pos), j) - pow(vacuum_pos, j);
    }
    return sum;
}

namespace {

// [z^b w^a] exp(A z + B w)
Rational exp_bilinear_coefficient(const Rational& A, const Rational& B, int a, int b) {
    return pow(A, b) * pow(B, a) / (factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b)));
}

}  // namespace

CommutatorReport verify_commutator(int k, int l, int z_order, const std::vector<MayaState>& test_states) {
    CommutatorReport report;
    const QSeries ratio = zeta_ratio(k, 2 * z_order);
    for (const auto& state : test_states) {
        const QVector v = QVector::basis(state, 1);
        std::vector<QVector> l_first(static_cast<std::size_t>(z_order) + 1), k_first(static_cast<std::size_t>(z_order) + 1);
        for (int d = 0; d <= z_order; ++d) {
            l_first[static_cast<std::size_t>(d)] = e_tilde_coefficient(l, d, v);
            k_first[static_cast<std::size_t>(d)] = e_tilde_coefficient(k, d, v);
        }
        const auto rhs_images = e_operator_images(k + l, state);
        for (int a = 0; a <= z_order; ++a) {
            for (int b = 0; b <= z_order; ++b) {
                QVector lhs = e_tilde_coefficient(k, a, l_first[static_cast<std::size_t>(b)]) -
                              e_tilde_coefficient(l, b, k_first[static_cast<std::size_t>(a)]);
                // zeta(kz - lw) e^{(z+w)c} = e^{z(c+k/2) + w(c-l/2)} - e^{z(c-k/2) + w(c+l/2)}
                QVector rhs;
                for (const auto& img : rhs_images) {
                    const Rational c = img.energy_shift.to_rational();
                    const Rational term =
                        exp_bilinear_coefficient(c + frac(k, 2), c - frac(l, 2), a, b) -
                        exp_bilinear_coefficient(c - frac(k, 2), c + frac(l, 2), a, b);
                    rhs.add(img.state, term * img.sign);
                }
                if (k + l == 0) {
                    // zeta(k(z+w)) / zeta(z+w) times the identity
                    rhs.add(state, ratio[a + b] * binomial(static_cast<unsigned>(a + b), static_cast<unsigned>(a)));
                }
                if (!(lhs == rhs)) {
                    report.passed = false;
                    report.failure = CommutatorFailure{state, a, b};
                    return report;
                }
            }
        }
    }
    return report;
}

bool verify_vacuum_e0(int z_order) {
    const auto etilde = e_tilde(0, vacuum_vector(), z_order);
    const QSeries zeta = zeta_over_z(z_order);
    const QSeries u = inverse_zeta_times_z(z_order);
    const MayaState vac = MayaState::vacuum();
    FockVector<QSeries> result;
    for (const auto& [s, series] : etilde.terms) result.add(s, zeta * series.shifted(1));
    result.add(vac, zeta * u);
    FockVector<QSeries> expected;
    expected.add(vac, QSeries::constant(z_order, 1));
    return result == expected;
}

}  // namespace hqc::fock
