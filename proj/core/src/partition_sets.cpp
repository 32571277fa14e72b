#include "qder/partition_sets.hpp"

#include <stdexcept>

namespace qder {

namespace {

int second_part(const Partition& p) { return p.pt() >= 2 ? p.part(1) : 0; }

}  // namespace

std::vector<std::pair<Partition, Partition>> bijection_sets(int a, int b, PairSet which) {
    if (a < 0 || b < 0) throw std::invalid_argument("bijection_sets: negative parameters");
    std::vector<std::pair<Partition, Partition>> out;

    int total = which == PairSet::F ? a + 1 : a;
    PartitionConstraint lambda_c;
    lambda_c.exact_parts = b;

    for (int x = 0; x <= total; ++x) {
        std::vector<Partition> lambdas = list_partitions(x, lambda_c);
        if (lambdas.empty()) continue;
        std::vector<Partition> mus = list_partitions(total - x);
        for (const Partition& l : lambdas) {
            for (const Partition& m : mus) {
                bool keep = false;
                switch (which) {
                    case PairSet::A:
                        keep = l.first_part() == m.first_part() + 1;
                        break;
                    case PairSet::B:
                        keep = l.is_cute() && m.first_part() == second_part(m);
                        break;
                    case PairSet::E:
                        keep = l.first_part() <= m.first_part();
                        break;
                    case PairSet::F:
                        keep = l.first_part() <= m.first_part() && second_part(m) < m.first_part();
                        break;
                    case PairSet::G:
                        keep = l.first_part() <= m.first_part() + 1;
                        break;
                }
                if (keep) out.emplace_back(l, m);
            }
        }
    }
    return out;
}

}  // namespace qder
