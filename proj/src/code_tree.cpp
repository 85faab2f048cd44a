#include "f2vdm/code_tree.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace f2vdm {

namespace {

using boost::multiprecision::cpp_int;

// Kraft numerator over the common denominator 2^max_len, reduced. For a
// prefix-free set the sum is <= 1, so the numerator fits in 64 bits whenever
// max_len <= 62; longer codes fall back to arbitrary precision.
void kraft_exact(const std::vector<std::string>& words, int max_len,
                 std::string* out_string, bool* out_complete) {
  if (max_len <= 62) {
    std::uint64_t num = 0;
    for (const auto& w : words) {
      num += std::uint64_t{1} << (max_len - static_cast<int>(w.size()));
    }
    int shift = num == 0 ? 0 : std::min(std::countr_zero(num), max_len);
    std::uint64_t n = num >> shift;
    std::uint64_t den = std::uint64_t{1} << (max_len - shift);
    std::ostringstream os;
    os << n;
    if (den != 1) os << '/' << den;
    *out_string = os.str();
    *out_complete = (n == 1 && den == 1);
    return;
  }
  cpp_int num = 0;
  for (const auto& w : words) {
    num += cpp_int(1) << (max_len - static_cast<int>(w.size()));
  }
  int shift = num == 0 ? 0 : std::min<int>(static_cast<int>(lsb(num)), max_len);
  cpp_int n = num >> shift;
  cpp_int den = cpp_int(1) << (max_len - shift);
  std::ostringstream os;
  os << n;
  if (den != 1) os << '/' << den;
  *out_string = os.str();
  *out_complete = (n == 1 && den == 1);
}

}  // namespace

CodeTree CodeTree::from_codewords(std::vector<std::string> words) {
  if (words.size() < 2 || !std::has_single_bit(words.size())) {
    std::ostringstream os;
    os << "codeword count " << words.size() << " is not 2^m with m >= 1";
    throw error(errc::bad_count, os.str());
  }
  for (const auto& w : words) {
    if (w.empty()) throw error(errc::empty_word, "empty codeword");
    for (char c : w) {
      if (c != '0' && c != '1') {
        std::ostringstream os;
        os << "codeword \"" << w << "\" contains a symbol outside {0,1}";
        throw error(errc::domain, os.str());
      }
    }
  }
  std::sort(words.begin(), words.end());
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    // In sorted order any prefix pair shows up as an adjacent pair.
    const auto& a = words[i];
    const auto& b = words[i + 1];
    if (a.size() <= b.size() && b.compare(0, a.size(), a) == 0) {
      std::ostringstream os;
      if (a == b) {
        os << "duplicate codeword \"" << a << "\"";
      } else {
        os << "codeword \"" << a << "\" is a prefix of \"" << b << "\"";
      }
      throw error(errc::prefix_violation, os.str());
    }
  }

  CodeTree t;
  t.m_ = std::countr_zero(words.size());
  double kraft_value = 0.0;
  for (const auto& w : words) {
    int len = static_cast<int>(w.size());
    t.max_length_ = std::max(t.max_length_, len);
    t.total_length_ += len;
    t.total_zeros_ += std::count(w.begin(), w.end(), '0');
    kraft_value += std::exp2(-static_cast<double>(len));
  }
  t.kraft_value_ = kraft_value;
  kraft_exact(words, t.max_length_, &t.kraft_string_, &t.complete_);
  if (t.complete_) t.kraft_value_ = 1.0;
  t.codewords_ = std::move(words);
  return t;
}

std::vector<LeafStats> leaf_stats(const CodeTree& tree, const BinaryWeights& weights) {
  std::vector<LeafStats> stats;
  stats.reserve(tree.leaf_count());
  for (const auto& w : tree.codewords()) {
    LeafStats s;
    s.len = static_cast<int>(w.size());
    s.zeros = static_cast<int>(std::count(w.begin(), w.end(), '0'));
    s.ones = s.len - s.zeros;
    s.log2_weight = s.zeros * weights.log2_w0() + s.ones * weights.log2_w1();
    stats.push_back(s);
  }
  return stats;
}

}  // namespace f2vdm
