#include "f2vdm/metrics.hpp"

#include <cmath>
#include <span>
#include <vector>

namespace f2vdm {

namespace {

// Pairwise summation keeps the rounding error O(log n) for the few sums
// here that cannot be folded into integer branch counts.
double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 16) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

void require_leaf_distribution(const CodeTree& tree, const BinaryWeights& dist) {
  if (!tree.is_complete()) {
    throw error(errc::not_complete,
                "leaf probabilities need a complete tree (Kraft sum " +
                    tree.kraft_sum_string() + ")");
  }
  if (!dist.is_distribution()) {
    throw error(errc::not_a_distribution, "weights do not sum to one");
  }
}

}  // namespace

double idiv_match(const CodeTree& tree, const BinaryWeights& weights) {
  // Sum of log2 leaf weights collapses to exact branch totals:
  //   sum_i log2 Q_T(i) = Z*log2(w0) + O*log2(w1).
  double m = static_cast<double>(tree.m());
  double log_sum = static_cast<double>(tree.total_zeros()) * weights.log2_w0() +
                   static_cast<double>(tree.total_ones()) * weights.log2_w1();
  return -m - std::exp2(-m) * log_sum;
}

double expected_length(const CodeTree& tree) {
  return static_cast<double>(tree.total_length()) /
         static_cast<double>(tree.leaf_count());
}

double normalized_idiv(const CodeTree& tree, const BinaryWeights& weights) {
  return idiv_match(tree, weights) / expected_length(tree);
}

double idiv_compress(const CodeTree& tree, const BinaryWeights& dist) {
  require_leaf_distribution(tree, dist);
  double m = static_cast<double>(tree.m());
  std::vector<double> terms;
  terms.reserve(tree.leaf_count());
  for (const auto& s : leaf_stats(tree, dist)) {
    terms.push_back(std::exp2(s.log2_weight) * (s.log2_weight + m));
  }
  return pairwise_sum(terms);
}

double leaf_entropy(const CodeTree& tree, const BinaryWeights& dist) {
  require_leaf_distribution(tree, dist);
  std::vector<double> terms;
  terms.reserve(tree.leaf_count());
  for (const auto& s : leaf_stats(tree, dist)) {
    terms.push_back(-std::exp2(s.log2_weight) * s.log2_weight);
  }
  return pairwise_sum(terms);
}

TreeMetrics tree_metrics(const CodeTree& tree, const BinaryWeights& weights) {
  TreeMetrics out;
  out.idiv_match = idiv_match(tree, weights);
  out.expected_len = expected_length(tree);
  out.normalized = out.idiv_match / out.expected_len;
  if (tree.is_complete() && weights.is_distribution()) {
    out.idiv_compress = idiv_compress(tree, weights);
    out.leaf_entropy = leaf_entropy(tree, weights);
  }
  return out;
}

}  // namespace f2vdm
