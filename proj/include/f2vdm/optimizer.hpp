#pragma once

#include <vector>

#include "f2vdm/code_tree.hpp"
#include "f2vdm/weights.hpp"

namespace f2vdm {

struct OptimizerTraceEntry {
  double delta_hat;   // divergence-per-bit estimate entering this iteration
  CodeTree tree;      // tree built from the weights scaled by 2^delta_hat
  double objective;   // idiv_match(tree) - delta_hat * expected_length(tree)
};

struct OptimizerResult {
  double delta;       // minimum I-divergence per output bit over complete trees
  CodeTree tree;      // a tree attaining it
  std::vector<OptimizerTraceEntry> trace;
  int iterations;
};

// Minimizes D(U_T || Q_T) / E(L) over complete trees with 2^m leaves by
// re-running Tunstall on the scaled weights Q * 2^delta_hat until the
// auxiliary objective reaches zero:
//
//   T <- tunstall(Q)
//   repeat:
//     delta_hat <- idiv_match(T) / expected_length(T)
//     T' <- tunstall(Q scaled by delta_hat)
//     stop when idiv_match(T') - delta_hat * expected_length(T') >= -tol
//               or T' == T
//     T <- T'
//
// delta_hat strictly decreases across iterations and there are finitely many
// complete trees, so the loop terminates; a 2^(m+4) iteration guard turns a
// logic bug into errc::internal instead of a hang.
// Throws errc::not_a_distribution, errc::m_too_large, errc::domain (tol <= 0).
OptimizerResult optimize_matcher(const BinaryWeights& dist, int m, double tol = 1e-12);

// max(q0,q1) <= 4*min(q0,q1). When true, the optimal tree is complete for
// every m, so the optimizer's result is globally optimal over all trees.
bool completeness_sufficient(const BinaryWeights& dist);

// max(q0,q1) * 2^delta <= 1 (+1e-12): both scaled weights stay at or below
// one, certifying that no non-complete tree improves on the complete-tree
// optimum for this particular (Q, delta).
bool global_optimality_check(const BinaryWeights& dist, double delta);

// log2(1 / min(q0,q1)) / m, an upper bound on the achievable I-divergence
// per bit at block length m.
double perbit_bound(const BinaryWeights& dist, int m);

}  // namespace f2vdm
