#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qder/partition.hpp"

namespace qder {

enum class PartitionFlavor { symplectic, orthogonal };

// Partition plus a +-1 sign per relevant present part size: even sizes for
// the symplectic flavor (odd parts must then have even multiplicity), odd
// sizes for the orthogonal flavor (even parts must have even multiplicity).
class SignedPartition {
  public:
    SignedPartition(Partition base, PartitionFlavor flavor, std::map<int, int> signs);

    const Partition& base() const { return base_; }
    PartitionFlavor flavor() const { return flavor_; }
    const std::map<int, int>& signs() const { return signs_; }
    int sign(int size) const;
    int size() const { return base_.size(); }

    // "[4,4,2] 4:+, 2:-"
    std::string to_string() const;

    // True when every part size the flavor constrains has even multiplicity.
    static bool flavor_admits(const Partition& base, PartitionFlavor flavor);

    // All 2^k sign assignments of `base`, k the number of sign-carrying sizes
    // (distinct even sizes for symplectic, distinct odd sizes for orthogonal).
    // Deterministic order: sizes ascending, + before - at the highest size
    // varying slowest.
    static void expansions(const Partition& base, PartitionFlavor flavor,
                           const std::function<void(const SignedPartition&)>& visit);
    static std::vector<SignedPartition> list_expansions(const Partition& base,
                                                        PartitionFlavor flavor);

  private:
    Partition base_;
    PartitionFlavor flavor_;
    std::map<int, int> signs_;
};

}  // namespace qder
