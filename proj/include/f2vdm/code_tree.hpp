#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "f2vdm/errors.hpp"
#include "f2vdm/weights.hpp"

namespace f2vdm {

// Per-leaf path statistics under a given BinaryWeights: branch counts and the
// log2 of the induced leaf weight w0^zeros * w1^ones.
struct LeafStats {
  int len = 0;
  int zeros = 0;
  int ones = 0;
  double log2_weight = 0.0;
};

// A prefix-free set of 2^m binary codewords, i.e. a rooted binary tree with
// 2^m leaves ('0' = left branch). Codewords are held in canonical order
// (lexicographic, '0' < '1'); equality compares canonical forms. The Kraft
// sum is computed in exact dyadic arithmetic, so completeness is a hard
// yes/no, never a float comparison. Immutable after construction.
class CodeTree {
 public:
  // Validates the word list and canonicalizes it.
  // Throws: errc::empty_word, errc::domain (symbol outside {0,1}),
  // errc::prefix_violation, errc::bad_count (count not 2^m, m >= 1).
  static CodeTree from_codewords(std::vector<std::string> words);

  int m() const noexcept { return m_; }
  std::size_t leaf_count() const noexcept { return codewords_.size(); }
  const std::vector<std::string>& codewords() const noexcept { return codewords_; }
  int max_length() const noexcept { return max_length_; }

  bool is_complete() const noexcept { return complete_; }
  // Exact Kraft sum as a reduced fraction string, e.g. "1" or "3/4".
  const std::string& kraft_sum_string() const noexcept { return kraft_string_; }
  double kraft_sum_value() const noexcept { return kraft_value_; }

  // Exact totals over all leaves.
  std::int64_t total_length() const noexcept { return total_length_; }
  std::int64_t total_zeros() const noexcept { return total_zeros_; }
  std::int64_t total_ones() const noexcept { return total_length_ - total_zeros_; }

  bool operator==(const CodeTree& other) const noexcept {
    return codewords_ == other.codewords_;
  }
  bool operator!=(const CodeTree& other) const noexcept { return !(*this == other); }

 private:
  CodeTree() = default;

  std::vector<std::string> codewords_;
  int m_ = 0;
  int max_length_ = 0;
  bool complete_ = false;
  std::string kraft_string_;
  double kraft_value_ = 0.0;
  std::int64_t total_length_ = 0;
  std::int64_t total_zeros_ = 0;
};

// One LeafStats per codeword, in canonical order. log2_weight is the log2 of
// the leaf weight induced by making every branching distribution equal to
// the given weights.
std::vector<LeafStats> leaf_stats(const CodeTree& tree, const BinaryWeights& weights);

}  // namespace f2vdm
