#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qder {

struct DurfeeDecomposition;

// Integer partition: weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int pt() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    int part(int k) const { return parts_[k]; }           // 0-based
    int first_part() const { return empty() ? 0 : parts_[0]; }

    Partition dual() const;
    std::map<int, int> multiplicities() const;
    int multiplicity(int i) const;

    // Number of odd parts, counted with multiplicity.
    int odd_part_count() const;
    // sum_i (lambda'_i)^2.
    long long dual_square_sum() const;
    // Number of distinct even / odd part sizes.
    int distinct_even_sizes() const;
    int distinct_odd_sizes() const;

    DurfeeDecomposition durfee() const;

    // lambda_1 = 1, or lambda_{k-1} > lambda_k = k for some k >= 2.
    bool is_cute() const;
    // Durfee square k with the partition to its right having exactly k - 1
    // parts; must agree with is_cute.
    bool is_cute_via_durfee() const;
    // lambda_k = k for some k.
    bool has_fixed_point() const;

    // "[3,2,1]"; "[]" for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct DurfeeDecomposition {
    int side = 0;
    Partition right;  // rows 1..side beyond the square
    Partition below;  // rows side+1..
};

struct PartitionConstraint {
    enum class MultRule { none, odd_parts_even_mult, even_parts_even_mult, all_even_mult };

    MultRule rule = MultRule::none;
    std::optional<int> exact_parts;
    std::optional<int> max_part;

    bool admits(const Partition& p) const;
};

using PartitionVisitor = std::function<void(const Partition&)>;

// Yields each qualifying partition of n exactly once in reverse-lexicographic
// order (largest first part first). n = 0 yields the empty partition when the
// constraint admits it.
void enumerate_partitions(int n, const PartitionConstraint& constraint,
                          const PartitionVisitor& visit);

// Restriction of the above to partitions with the given first part; the
// chunking unit for deterministic parallel sweeps.
void enumerate_partitions_with_first(int n, int first, const PartitionConstraint& constraint,
                                     const PartitionVisitor& visit);

std::vector<Partition> list_partitions(int n, const PartitionConstraint& constraint = {});

}  // namespace qder
