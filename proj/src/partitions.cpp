#include "hqc/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

namespace hqc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw PartitionError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw PartitionError("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= part(0); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        c.push_back(count);
    }
    return Partition(std::move(c));
}

std::string to_string(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return {};
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(start, end - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value <= 0)
            throw PartitionError("malformed partition: \"" + std::string(text) + "\"");
        parts.push_back(value);
        start = end + 1;
    }
    return Partition::from_unsorted(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw PartitionError("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Rational z_factor(const Partition& mu) {
    Rational z = 1;
    for (const auto& [part, mult] : mu.multiplicities())
        z *= pow(Rational(part), mult) * factorial(static_cast<unsigned>(mult));
    return z;
}

Rational automorphism_factor(const Partition& mu) {
    Rational a = 1;
    for (const auto& [part, mult] : mu.multiplicities()) a *= factorial(static_cast<unsigned>(mult));
    return a;
}

namespace {

// Beta numbers lambda_i - i for i = 1..L.
std::vector<int> beta_set(const Partition& lambda, int padded_length) {
    std::vector<int> beta(static_cast<std::size_t>(padded_length));
    for (int i = 0; i < padded_length; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) - (i + 1);
    return beta;
}

Partition from_beta_set(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<int> parts;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int p = beta[i] + static_cast<int>(i) + 1;
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

std::vector<SignedPartition> move_beads(const Partition& lambda, int shift) {
    const int n = shift > 0 ? shift : -shift;
    const int padded = lambda.length() + n;
    const std::vector<int> beta = beta_set(lambda, padded);
    const std::set<int> occupied(beta.begin(), beta.end());
    const int floor = -padded;  // every position below is occupied
    std::vector<SignedPartition> out;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int from = beta[i];
        const int to = from + shift;
        if (to < floor || occupied.count(to)) continue;
        const int lo = std::min(from, to), hi = std::max(from, to);
        int height = 0;
        for (auto it = occupied.upper_bound(lo); it != occupied.end() && *it < hi; ++it) ++height;
        std::vector<int> moved = beta;
        moved[i] = to;
        out.push_back(SignedPartition{from_beta_set(std::move(moved)), height % 2 == 0 ? 1 : -1});
    }
    std::sort(out.begin(), out.end(),
              [](const SignedPartition& a, const SignedPartition& b) { return a.partition > b.partition; });
    return out;
}

}  // namespace

std::vector<SignedPartition> ribbons_addable(const Partition& lambda, int n) {
    if (n < 1) throw PartitionError("ribbon size must be positive");
    return move_beads(lambda, n);
}

std::vector<SignedPartition> ribbons_removable(const Partition& lambda, int n) {
    if (n < 1) throw PartitionError("ribbon size must be positive");
    if (n > lambda.size()) return {};
    return move_beads(lambda, -n);
}

Integer character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw PartitionError("character: |lambda| != |mu|");
    if (mu.empty()) return 1;
    thread_local std::map<std::pair<Partition, Partition>, Integer> memo;
    auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
    Integer value = 0;
    for (const auto& [smaller, sign] : ribbons_removable(lambda, mu.part(0))) {
        const Integer sub = character(smaller, rest);
        if (sign > 0)
            value += sub;
        else
            value -= sub;
    }
    memo.emplace(std::move(key), value);
    return value;
}

std::map<Partition, Integer> character_column(const Partition& mu) {
    std::map<Partition, Integer> current{{Partition{}, Integer(1)}};
    for (int part : mu.parts()) {
        std::map<Partition, Integer> next;
        for (const auto& [lambda, c] : current) {
            for (const auto& [bigger, sign] : ribbons_addable(lambda, part)) {
                Integer& slot = next[bigger];
                if (sign > 0)
                    slot += c;
                else
                    slot -= c;
            }
        }
        std::erase_if(next, [](const auto& kv) { return sgn(kv.second) == 0; });
        current = std::move(next);
    }
    return current;
}

}  // namespace hqc
