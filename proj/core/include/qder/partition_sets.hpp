#pragma once

#include <utility>
#include <vector>

#include "qder/partition.hpp"

namespace qder {

// Pair families over (lambda, mu) with pt(lambda) = b. The empty partition is
// admitted for mu throughout, with first/second part and max read as 0.
//
//   A: |l|+|m| = a,   l_1 = m_1 + 1
//   B: |l|+|m| = a,   l cute, m_1 = m_2
//   E: |l|+|m| = a,   max(l) <= max(m)
//   F: |l|+|m| = a+1, max(l) <= max(m), m_2 < m_1
//   G: |l|+|m| = a,   max(l) <= max(m) + 1
enum class PairSet { A, B, E, F, G };

std::vector<std::pair<Partition, Partition>> bijection_sets(int a, int b, PairSet which);

}  // namespace qder
