#include "f2vdm/tunstall.hpp"

#include <cstdint>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace f2vdm {

namespace {

struct Leaf {
  double log2_weight;
  std::string prefix;
};

// Max-heap order: heavier leaf first; on an exactly equal weight, the
// lexicographically smaller prefix first. Equal-weight collisions are the
// norm, not the exception — under symmetric weights every leaf at one depth
// carries the same (bitwise identical) incremental log sum — and the
// lexicographic arm keeps the expansion order, and with it the output tree,
// deterministic.
struct LeafLess {
  bool operator()(const Leaf& a, const Leaf& b) const {
    if (a.log2_weight != b.log2_weight) return a.log2_weight < b.log2_weight;
    return a.prefix > b.prefix;
  }
};

}  // namespace

CodeTree tunstall_build(const BinaryWeights& weights, int m) {
  if (m < 1 || m > kMaxM) {
    std::ostringstream os;
    os << "m = " << m << " outside [1, " << kMaxM << "]";
    throw error(errc::m_too_large, os.str());
  }
  double c0 = weights.log2_w0();
  double c1 = weights.log2_w1();

  std::priority_queue<Leaf, std::vector<Leaf>, LeafLess> heap;
  heap.push(Leaf{0.0, ""});
  std::uint64_t expansions = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t i = 0; i < expansions; ++i) {
    Leaf top = heap.top();
    heap.pop();
    heap.push(Leaf{top.log2_weight + c0, top.prefix + '0'});
    heap.push(Leaf{top.log2_weight + c1, top.prefix + '1'});
  }

  std::vector<std::string> words;
  words.reserve(heap.size());
  while (!heap.empty()) {
    words.push_back(heap.top().prefix);
    heap.pop();
  }
  return CodeTree::from_codewords(std::move(words));
}

}  // namespace f2vdm
