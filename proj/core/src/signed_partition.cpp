#include "qder/signed_partition.hpp"

#include <sstream>
#include <stdexcept>

namespace qder {

namespace {

bool size_needs_sign(int size, PartitionFlavor flavor) {
    return flavor == PartitionFlavor::symplectic ? size % 2 == 0 : size % 2 == 1;
}

}  // namespace

SignedPartition::SignedPartition(Partition base, PartitionFlavor flavor, std::map<int, int> signs)
    : base_(std::move(base)), flavor_(flavor), signs_(std::move(signs)) {
    if (!flavor_admits(base_, flavor_))
        throw std::invalid_argument("partition violates the flavor's multiplicity constraint");
    auto mults = base_.multiplicities();
    for (const auto& [size, mult] : mults) {
        if (size_needs_sign(size, flavor_)) {
            auto it = signs_.find(size);
            if (it == signs_.end())
                throw std::invalid_argument("missing sign for part size " + std::to_string(size));
            if (it->second != 1 && it->second != -1)
                throw std::invalid_argument("signs must be +1 or -1");
        }
    }
    for (const auto& [size, sgn] : signs_)
        if (!size_needs_sign(size, flavor_) || mults.find(size) == mults.end())
            throw std::invalid_argument("sign attached to a size that does not carry one");
}

int SignedPartition::sign(int size) const {
    auto it = signs_.find(size);
    if (it == signs_.end()) throw std::out_of_range("no sign for part size " + std::to_string(size));
    return it->second;
}

std::string SignedPartition::to_string() const {
    std::ostringstream os;
    os << base_.to_string();
    bool first = true;
    for (auto it = signs_.rbegin(); it != signs_.rend(); ++it) {
        os << (first ? " " : ", ");
        os << it->first << ":" << (it->second > 0 ? "+" : "-");
        first = false;
    }
    return os.str();
}

bool SignedPartition::flavor_admits(const Partition& base, PartitionFlavor flavor) {
    for (const auto& [size, mult] : base.multiplicities()) {
        bool constrained = flavor == PartitionFlavor::symplectic ? size % 2 == 1 : size % 2 == 0;
        if (constrained && mult % 2 == 1) return false;
    }
    return true;
}

void SignedPartition::expansions(const Partition& base, PartitionFlavor flavor,
                                 const std::function<void(const SignedPartition&)>& visit) {
    if (!flavor_admits(base, flavor))
        throw std::invalid_argument("partition violates the flavor's multiplicity constraint");
    std::vector<int> sized;
    for (const auto& [size, mult] : base.multiplicities())
        if (size_needs_sign(size, flavor)) sized.push_back(size);

    int k = static_cast<int>(sized.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::map<int, int> signs;
        for (int i = 0; i < k; ++i) signs[sized[i]] = (mask >> i) & 1 ? -1 : 1;
        visit(SignedPartition(base, flavor, std::move(signs)));
    }
}

std::vector<SignedPartition> SignedPartition::list_expansions(const Partition& base,
                                                              PartitionFlavor flavor) {
    std::vector<SignedPartition> out;
    expansions(base, flavor, [&](const SignedPartition& sp) { out.push_back(sp); });
    return out;
}

}  // namespace qder
