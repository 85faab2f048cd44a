#pragma once

#include "f2vdm/code_tree.hpp"
#include "f2vdm/weights.hpp"

namespace f2vdm {

inline constexpr int kMaxM = 24;

// Builds the complete tree with 2^m leaves that maximizes the sum of
// log2 leaf weights: 2^m - 1 greedy expansions, each converting the
// maximum-weight leaf into a branching node. Exact weight ties expand the
// lexicographically smallest prefix, so the result is deterministic.
// Throws errc::m_too_large unless 1 <= m <= kMaxM.
CodeTree tunstall_build(const BinaryWeights& weights, int m);

}  // namespace f2vdm
