#pragma once

// Integer partitions, border strips and symmetric-group characters.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hqc/rings.hpp"

namespace hqc {

class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weakly decreasing list of positive parts.  Ordering is lexicographic on
/// the part list; "reverse lexicographic" listings sort with std::greater.
class Partition {
public:
    Partition() = default;
    /// Throws PartitionError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    /// Sorts the parts first.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// 0-based; returns 0 past the last part.
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    /// part -> multiplicity.
    std::map<int, int> multiplicities() const;
    Partition conjugate() const;
    bool is_hook() const { return parts_.size() <= 1 || parts_[1] == 1; }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Comma-separated parts, e.g. "3,1,1"; the empty partition is "".
std::string to_string(const Partition& p);
/// Inverse of to_string; parts may be given in any order.
Partition parse_partition(std::string_view text);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// z_mu = prod_i i^{m_i} m_i!.
Rational z_factor(const Partition& mu);
/// prod_i m_i!.
Rational automorphism_factor(const Partition& mu);

struct SignedPartition {
    Partition partition;
    int sign = 1;
    friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

/// Partitions obtained by adding a border strip of n boxes, each with
/// sign (-1)^{height}.  Result sorted in reverse lexicographic order.
std::vector<SignedPartition> ribbons_addable(const Partition& lambda, int n);
/// Partitions obtained by removing a border strip of n boxes.
std::vector<SignedPartition> ribbons_removable(const Partition& lambda, int n);

/// chi^lambda evaluated at cycle type mu (Murnaghan-Nakayama, memoized per
/// thread).  Throws PartitionError if |lambda| != |mu|.
Integer character(const Partition& lambda, const Partition& mu);

/// lambda -> chi^lambda_mu over all lambda with nonzero character, built by
/// adding ribbons of sizes mu_1, mu_2, ... to the empty diagram.
std::map<Partition, Integer> character_column(const Partition& mu);

}  // namespace hqc
