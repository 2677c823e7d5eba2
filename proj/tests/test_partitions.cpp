#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hqc/partitions.hpp"

using namespace hqc;

namespace {

// Euler's pentagonal recurrence.
std::vector<long> partition_counts(int n_max) {
    std::vector<long> p(static_cast<std::size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long sign = (k % 2 == 1) ? 1 : -1;
            p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) p[static_cast<std::size_t>(n)] += sign * p[static_cast<std::size_t>(n - g2)];
        }
    return p;
}

Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition::from_unsorted(lengths);
}

using Poly = std::map<std::vector<int>, Integer>;

Poly power_sum_product(const Partition& mu, int vars) {
    Poly acc{{std::vector<int>(static_cast<std::size_t>(vars), 0), Integer(1)}};
    for (int part : mu.parts()) {
        Poly next;
        for (const auto& [e, c] : acc)
            for (int v = 0; v < vars; ++v) {
                auto f = e;
                f[static_cast<std::size_t>(v)] += part;
                next[f] += c;
            }
        acc = std::move(next);
    }
    return acc;
}

// Frobenius: chi^lambda_mu = [x^{lambda + delta}] a_delta * p_mu.
Integer frobenius_character(const Partition& lambda, const Partition& mu) {
    const int n = lambda.size();
    const Poly p = power_sum_product(mu, n);
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)]) ++inversions;
        std::vector<int> exponent(static_cast<std::size_t>(n));
        bool valid = true;
        for (int i = 0; i < n; ++i) {
            const int target = lambda.part(i) + (n - 1 - i);
            const int from_vandermonde = n - 1 - sigma[static_cast<std::size_t>(i)];
            exponent[static_cast<std::size_t>(i)] = target - from_vandermonde;
            if (exponent[static_cast<std::size_t>(i)] < 0) valid = false;
        }
        if (!valid) continue;
        auto it = p.find(exponent);
        if (it != p.end()) total += (inversions % 2 == 0 ? 1 : -1) * it->second;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

Integer hook_length_dimension(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    Integer hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) hooks *= lambda.part(i) - j + conj.part(j) - i - 1;
    Integer nf = factorial(static_cast<unsigned>(lambda.size())).get_num();
    return nf / hooks;
}

}  // namespace

TEST_CASE("construction and parsing") {
    CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), PartitionError);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, 0}), PartitionError);
    const Partition p = Partition::from_unsorted({1, 3, 1});
    CHECK(p == Partition{3, 1, 1});
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(to_string(p) == "3,1,1");
    CHECK(parse_partition("1,3,1") == p);
    CHECK(parse_partition(" 2 , 2 ") == Partition{2, 2});
    CHECK(parse_partition("") == Partition{});
    CHECK_THROWS_AS(parse_partition("2,x"), PartitionError);
    CHECK_THROWS_AS(parse_partition("2,-1"), PartitionError);
    CHECK_THROWS_AS(parse_partition("2,,1"), PartitionError);
    CHECK(p.conjugate() == Partition{3, 1, 1});
    CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});
    CHECK(p.multiplicities() == std::map<int, int>{{1, 2}, {3, 1}});
    CHECK(Partition{3, 1, 1}.is_hook());
    CHECK(!Partition{2, 2}.is_hook());
}

TEST_CASE("enumeration in reverse lexicographic order") {
    const auto counts = partition_counts(12);
    CHECK(counts[12] == 77);
    for (int n = 0; n <= 12; ++n) {
        const auto ps = partitions_of(n);
        CHECK(static_cast<long>(ps.size()) == counts[static_cast<std::size_t>(n)]);
        CHECK(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
        CHECK(std::set<Partition>(ps.begin(), ps.end()).size() == ps.size());
        for (const auto& p : ps) CHECK(p.size() == n);
    }
    const auto four = partitions_of(4);
    CHECK(four.front() == Partition{4});
    CHECK(four[1] == Partition{3, 1});
    CHECK(four.back() == Partition{1, 1, 1, 1});
}

TEST_CASE("centralizer orders by brute force over S_8") {
    const int n = 8;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<Partition, long> class_sizes;
    do ++class_sizes[cycle_type(perm)];
    while (std::next_permutation(perm.begin(), perm.end()));
    for (const auto& [mu, size] : class_sizes) {
        CAPTURE(to_string(mu));
        CHECK(z_factor(mu) * size == factorial(n));
    }
    CHECK(z_factor(Partition{3, 3, 2}) == 36);
    CHECK(automorphism_factor(Partition{3, 3, 2}) == 2);
    CHECK(automorphism_factor(Partition{1, 1, 1}) == 6);
}

TEST_CASE("characters match the Frobenius formula") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                CAPTURE(to_string(lambda));
                CAPTURE(to_string(mu));
                CHECK(character(lambda, mu) == frobenius_character(lambda, mu));
            }
    CHECK_THROWS_AS(character(Partition{2}, Partition{1}), PartitionError);
    CHECK(character(Partition{}, Partition{}) == 1);
}

TEST_CASE("character orthogonality and dimensions") {
    for (int n = 1; n <= 9; ++n) {
        const auto ps = partitions_of(n);
        Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
        for (const auto& lambda : ps) {
            CHECK(character(lambda, ones) == hook_length_dimension(lambda));
            for (const auto& nu : ps) {
                Rational row = 0;
                for (const auto& mu : ps) row += Rational(character(lambda, mu) * character(nu, mu)) / z_factor(mu);
                CHECK(row == (lambda == nu ? 1 : 0));
            }
        }
    }
}

TEST_CASE("ribbons") {
    // adding then removing a ribbon returns the same sign
    for (int n = 0; n <= 7; ++n)
        for (const auto& lambda : partitions_of(n))
            for (int k = 1; k <= 4; ++k)
                for (const auto& [bigger, sign] : ribbons_addable(lambda, k)) {
                    CHECK(bigger.size() == n + k);
                    const auto back = ribbons_removable(bigger, k);
                    auto it = std::find_if(back.begin(), back.end(),
                                           [&](const SignedPartition& s) { return s.partition == lambda; });
                    REQUIRE(it != back.end());
                    CHECK(it->sign == sign);
                }
    const auto hooks = ribbons_addable(Partition{}, 3);
    REQUIRE(hooks.size() == 3);
    CHECK(hooks[0] == SignedPartition{Partition{3}, 1});
    CHECK(hooks[1] == SignedPartition{Partition{2, 1}, -1});
    CHECK(hooks[2] == SignedPartition{Partition{1, 1, 1}, 1});
    CHECK(ribbons_removable(Partition{2, 2}, 4).empty());
    REQUIRE(ribbons_removable(Partition{2, 2}, 3).size() == 1);
    CHECK(ribbons_removable(Partition{2, 2}, 3)[0] == SignedPartition{Partition{1}, -1});
}

TEST_CASE("character columns") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) {
            const auto column = character_column(mu);
            for (const auto& lambda : partitions_of(n)) {
                const Integer chi = character(lambda, mu);
                auto it = column.find(lambda);
                CHECK((it == column.end() ? Integer(0) : it->second) == chi);
            }
        }
    // a single part only reaches hooks
    for (const auto& [lambda, chi] : character_column(Partition{40})) CHECK(lambda.is_hook());
}
