#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "f2vdm/code_tree.hpp"
#include "f2vdm/weights.hpp"

namespace f2vdm {

// Brute-force enumeration of candidate trees, used to certify the
// constructive algorithms on small instances. Deliberately independent of
// the Tunstall/optimizer code paths: trees are generated structurally and
// scored through the public metrics only.

enum class EnumMode {
  complete,            // complete binary trees with exactly num_leaves leaves
  prefix_free_capped,  // all prefix codes with num_leaves words, depth <= max_depth
};

struct EnumerationSpec {
  int num_leaves = 0;  // must be a power of two (trees need 2^m leaves)
  int max_depth = 0;   // ignored for EnumMode::complete
  EnumMode mode = EnumMode::complete;
};

enum class Objective {
  idiv_match,       // D(U_T || Q_T)
  normalized_idiv,  // D(U_T || Q_T) / E(L)
  idiv_compress,    // D(Q_T || U_T); complete mode only
};

struct BruteResult {
  CodeTree tree;  // minimizer; exact value ties keep the canonically
                  // smallest codeword list
  double value = 0.0;
  std::uint64_t trees_visited = 0;
};

// Streams every complete binary tree with 2^m leaves to the callback exactly
// once, codewords in canonical order, via recursive leaf-count splitting.
// Returning false from the callback stops the enumeration early.
// Throws errc::m_too_large unless 1 <= m <= 4 (the tree count is
// Catalan(2^m - 1): 1, 5, 429, 9694845).
void enumerate_complete(int m, const std::function<bool(const CodeTree&)>& fn);

// Streams every prefix code with num_leaves words, all of length <= max_depth,
// to the callback, each exactly once. Complete trees are included; so are
// codes whose Kraft sum falls short of one. num_leaves must be a power of two
// (errc::bad_count otherwise); errc::too_large unless num_leaves <= 8 and
// 1 <= max_depth <= 8.
void enumerate_prefix_codes(int num_leaves, int max_depth,
                            const std::function<bool(const CodeTree&)>& fn);

// Exhaustive minimum of the objective over the enumerated space. Throws
// errc::domain when idiv_compress is asked for outside complete mode, plus
// whatever the enumeration or the metric itself rejects.
BruteResult brute_min(const EnumerationSpec& spec, const BinaryWeights& weights,
                      Objective objective);

}  // namespace f2vdm
