#pragma once

#include <optional>

#include "f2vdm/code_tree.hpp"
#include "f2vdm/weights.hpp"

namespace f2vdm {

// Divergence and length figures for one tree under one weight pair. All
// divergences are totals in bits; per-bit figures are the caller's division
// (by m for compression, by expected_len for matching).
struct TreeMetrics {
  double idiv_match = 0.0;     // D(U_T || Q_T)
  double expected_len = 0.0;   // E_{U_T}(L)
  double normalized = 0.0;     // idiv_match / expected_len
  // Defined only for complete trees under a true distribution.
  std::optional<double> idiv_compress;  // D(Q_T || U_T)
  std::optional<double> leaf_entropy;   // H(Q_T)
};

// D(U_T || Q_T) = -m - 2^-m * sum over leaves of log2 Q_T(i).
// Defined for any tree and any weighted distribution; negative values are
// possible when the weights do not sum to one.
double idiv_match(const CodeTree& tree, const BinaryWeights& weights);

// D(Q_T || U_T) = sum over leaves of Q_T(i) * (log2 Q_T(i) + m).
// Throws errc::not_complete unless the tree is complete (Q_T is a leaf
// distribution only then) and errc::not_a_distribution unless the weights
// sum to one.
double idiv_compress(const CodeTree& tree, const BinaryWeights& dist);

// H(Q_T). Same preconditions as idiv_compress.
double leaf_entropy(const CodeTree& tree, const BinaryWeights& dist);

// Arithmetic mean of codeword lengths.
double expected_length(const CodeTree& tree);

// idiv_match / expected_length: I-divergence per output bit.
double normalized_idiv(const CodeTree& tree, const BinaryWeights& weights);

// All of the above in one pass; the optional fields are set exactly when the
// tree is complete and the weights form a true distribution.
TreeMetrics tree_metrics(const CodeTree& tree, const BinaryWeights& weights);

}  // namespace f2vdm
