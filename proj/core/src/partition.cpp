#include "qder/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qder {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::dual() const {
    std::vector<int> d;
    d.reserve(first_part());
    for (int i = 1; i <= first_part(); ++i) {
        int cnt = 0;
        for (int p : parts_) {
            if (p >= i)
                ++cnt;
            else
                break;
        }
        d.push_back(cnt);
    }
    return Partition(std::move(d));
}

std::map<int, int> Partition::multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

int Partition::multiplicity(int i) const {
    int cnt = 0;
    for (int p : parts_)
        if (p == i) ++cnt;
    return cnt;
}

int Partition::odd_part_count() const {
    int cnt = 0;
    for (int p : parts_)
        if (p % 2 == 1) ++cnt;
    return cnt;
}

long long Partition::dual_square_sum() const {
    long long acc = 0;
    for (int i = 1; i <= first_part(); ++i) {
        long long cnt = 0;
        for (int p : parts_)
            if (p >= i) ++cnt;
        acc += cnt * cnt;
    }
    return acc;
}

int Partition::distinct_even_sizes() const {
    int cnt = 0;
    for (const auto& [size, mult] : multiplicities())
        if (size % 2 == 0) ++cnt;
    return cnt;
}

int Partition::distinct_odd_sizes() const {
    int cnt = 0;
    for (const auto& [size, mult] : multiplicities())
        if (size % 2 == 1) ++cnt;
    return cnt;
}

DurfeeDecomposition Partition::durfee() const {
    if (empty()) throw std::domain_error("Durfee decomposition of the empty partition");
    int side = 0;
    while (side < pt() && parts_[side] >= side + 1) ++side;

    DurfeeDecomposition d;
    d.side = side;
    std::vector<int> right, below;
    for (int i = 0; i < side; ++i)
        if (parts_[i] - side > 0) right.push_back(parts_[i] - side);
    for (int i = side; i < pt(); ++i) below.push_back(parts_[i]);
    d.right = Partition(std::move(right));
    d.below = Partition(std::move(below));
    return d;
}

bool Partition::is_cute() const {
    if (empty()) return false;
    if (parts_[0] == 1) return true;
    for (int k = 2; k <= pt(); ++k)
        if (parts_[k - 2] > parts_[k - 1] && parts_[k - 1] == k) return true;
    return false;
}

bool Partition::is_cute_via_durfee() const {
    if (empty()) return false;
    DurfeeDecomposition d = durfee();
    return d.right.pt() == d.side - 1;
}

bool Partition::has_fixed_point() const {
    for (int k = 1; k <= pt(); ++k)
        if (parts_[k - 1] == k) return true;
    return false;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

bool PartitionConstraint::admits(const Partition& p) const {
    if (exact_parts && p.pt() != *exact_parts) return false;
    if (max_part && p.first_part() > *max_part) return false;
    if (rule != MultRule::none) {
        for (const auto& [size, mult] : p.multiplicities()) {
            bool odd_size = size % 2 == 1;
            switch (rule) {
                case MultRule::odd_parts_even_mult:
                    if (odd_size && mult % 2 == 1) return false;
                    break;
                case MultRule::even_parts_even_mult:
                    if (!odd_size && mult % 2 == 1) return false;
                    break;
                case MultRule::all_even_mult:
                    if (mult % 2 == 1) return false;
                    break;
                case MultRule::none:
                    break;
            }
        }
    }
    return true;
}

namespace {

void descend(std::vector<int>& stack, int remaining, int cap,
             const PartitionConstraint& constraint, const PartitionVisitor& visit) {
    if (remaining == 0) {
        Partition p(stack);
        if (constraint.admits(p)) visit(p);
        return;
    }
    // Prune on the exact-parts requirement.
    if (constraint.exact_parts) {
        int have = static_cast<int>(stack.size());
        int need = *constraint.exact_parts - have;
        if (need <= 0) return;
        if (remaining < need) return;           // too few units left
        if (remaining > need * cap) return;     // cannot absorb with <= cap-sized parts
    }
    for (int next = std::min(cap, remaining); next >= 1; --next) {
        stack.push_back(next);
        descend(stack, remaining - next, next, constraint, visit);
        stack.pop_back();
    }
}

}  // namespace

void enumerate_partitions(int n, const PartitionConstraint& constraint,
                          const PartitionVisitor& visit) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    if (n == 0) {
        Partition empty;
        if ((!constraint.exact_parts || *constraint.exact_parts == 0) &&
            constraint.admits(empty))
            visit(empty);
        return;
    }
    int cap = constraint.max_part ? std::min(*constraint.max_part, n) : n;
    for (int first = cap; first >= 1; --first)
        enumerate_partitions_with_first(n, first, constraint, visit);
}

void enumerate_partitions_with_first(int n, int first, const PartitionConstraint& constraint,
                                     const PartitionVisitor& visit) {
    if (first < 1 || first > n) return;
    if (constraint.max_part && first > *constraint.max_part) return;
    std::vector<int> stack{first};
    descend(stack, n - first, first, constraint, visit);
}

std::vector<Partition> list_partitions(int n, const PartitionConstraint& constraint) {
    std::vector<Partition> out;
    enumerate_partitions(n, constraint, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace qder
