#include "f2vdm/oracle.hpp"

#include <bit>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "f2vdm/metrics.hpp"

namespace f2vdm {

namespace {

// Both generators run in continuation-passing style: codewords accumulate in
// one shared vector, the continuation fires once per finished tree, and a
// false return tears the whole recursion down (early stop).
using Cont = std::function<bool()>;

// Complete trees with n leaves under 'prefix': pick how many leaves the left
// subtree gets (1..n-1), recurse left, then right via the continuation.
// Left-subtree words are appended before right-subtree words, so each tree
// comes out with its codewords already in canonical order.
bool gen_complete(int n, const std::string& prefix,
                  std::vector<std::string>* words, const Cont& next) {
  if (n == 1) {
    words->push_back(prefix);
    bool keep = next();
    words->pop_back();
    return keep;
  }
  for (int k = 1; k < n; ++k) {
    bool keep = gen_complete(k, prefix + '0', words, [&, k, n] {
      return gen_complete(n - k, prefix + '1', words, next);
    });
    if (!keep) return false;
  }
  return true;
}

// Prefix codes with n words in the subtree rooted at 'prefix', all within
// 'remaining' further levels. Each final set is produced exactly once: the
// set itself fixes, node by node, whether the node is a codeword and how
// many words each child subtree holds, which is exactly the choice structure
// below.
bool gen_capped(int n, int remaining, const std::string& prefix,
                std::vector<std::string>* words, const Cont& next) {
  if (n == 0) return next();
  if (n == 1 && !prefix.empty()) {
    // The word sits at this node; prefix-freeness empties the rest of the
    // subtree, so this option exists only when the quota is exactly one.
    words->push_back(prefix);
    bool keep = next();
    words->pop_back();
    if (!keep) return false;
  }
  if (remaining == 0) return true;
  // A child subtree of depth remaining-1 holds at most 2^(remaining-1) words.
  int child_cap = remaining - 1 >= 4 ? 16 : 1 << (remaining - 1);
  for (int kl = n; kl >= 0; --kl) {
    int kr = n - kl;
    if (kl > child_cap || kr > child_cap) continue;
    bool keep = gen_capped(kl, remaining - 1, prefix + '0', words, [&, kr] {
      return gen_capped(kr, remaining - 1, prefix + '1', words, next);
    });
    if (!keep) return false;
  }
  return true;
}

}  // namespace

void enumerate_complete(int m, const std::function<bool(const CodeTree&)>& fn) {
  if (m < 1 || m > 4) {
    std::ostringstream os;
    os << "complete-tree enumeration needs m in [1, 4], got " << m;
    throw error(errc::m_too_large, os.str());
  }
  int n = 1 << m;
  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(n));
  gen_complete(n, "", &words, [&] {
    return fn(CodeTree::from_codewords(words));
  });
}

void enumerate_prefix_codes(int num_leaves, int max_depth,
                            const std::function<bool(const CodeTree&)>& fn) {
  if (num_leaves < 2 || !std::has_single_bit(static_cast<unsigned>(num_leaves))) {
    std::ostringstream os;
    os << "codeword count " << num_leaves << " is not 2^m with m >= 1";
    throw error(errc::bad_count, os.str());
  }
  if (num_leaves > 8 || max_depth < 1 || max_depth > 8) {
    std::ostringstream os;
    os << "capped enumeration limited to num_leaves <= 8, max_depth in [1, 8]; got "
       << num_leaves << ", " << max_depth;
    throw error(errc::too_large, os.str());
  }
  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(num_leaves));
  gen_capped(num_leaves, max_depth, "", &words, [&] {
    return fn(CodeTree::from_codewords(words));
  });
}

BruteResult brute_min(const EnumerationSpec& spec, const BinaryWeights& weights,
                      Objective objective) {
  if (objective == Objective::idiv_compress && spec.mode != EnumMode::complete) {
    throw error(errc::domain, "idiv_compress is defined on complete trees only");
  }
  auto evaluate = [&](const CodeTree& t) {
    switch (objective) {
      case Objective::idiv_match: return idiv_match(t, weights);
      case Objective::normalized_idiv: return normalized_idiv(t, weights);
      case Objective::idiv_compress: return idiv_compress(t, weights);
    }
    throw error(errc::internal, "unhandled objective");
  };

  std::optional<BruteResult> best;
  std::uint64_t visited = 0;
  auto consider = [&](const CodeTree& t) {
    ++visited;
    double value = evaluate(t);
    if (!best || value < best->value ||
        (value == best->value && t.codewords() < best->tree.codewords())) {
      best = BruteResult{t, value, 0};
    }
    return true;
  };

  if (spec.mode == EnumMode::complete) {
    if (spec.num_leaves < 2 ||
        !std::has_single_bit(static_cast<unsigned>(spec.num_leaves))) {
      std::ostringstream os;
      os << "codeword count " << spec.num_leaves << " is not 2^m with m >= 1";
      throw error(errc::bad_count, os.str());
    }
    enumerate_complete(std::countr_zero(static_cast<unsigned>(spec.num_leaves)),
                       consider);
  } else {
    enumerate_prefix_codes(spec.num_leaves, spec.max_depth, consider);
  }
  if (!best) {
    std::ostringstream os;
    os << "no prefix code has " << spec.num_leaves
       << " words within depth " << spec.max_depth;
    throw error(errc::domain, os.str());
  }
  best->trees_visited = visited;
  return *best;
}

}  // namespace f2vdm
