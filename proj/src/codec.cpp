#include "f2vdm/codec.hpp"

#include <algorithm>
#include <sstream>

#include "f2vdm/errors.hpp"

namespace f2vdm {

struct MatcherCode::Node {
  int index = -1;  // leaf: position of its codeword in by_index_; -1 inside
  std::unique_ptr<Node> child[2];
};

namespace {

std::uint8_t checked_bit(std::span<const std::uint8_t> bits, std::size_t i) {
  std::uint8_t b = bits[i];
  if (b > 1) {
    std::ostringstream os;
    os << "input byte at bit offset " << i << " is " << static_cast<int>(b)
       << ", expected 0 or 1";
    throw error(errc::invalid_symbol, os.str(), static_cast<std::int64_t>(i));
  }
  return b;
}

void append_index_bits(std::size_t index, int m, BitVec* out) {
  for (int b = m - 1; b >= 0; --b) {
    out->push_back(static_cast<std::uint8_t>((index >> b) & 1));
  }
}

}  // namespace

MatcherCode MatcherCode::from_tree(const CodeTree& tree) {
  return MatcherCode(tree, tree.codewords());
}

MatcherCode MatcherCode::with_order(const CodeTree& tree, std::vector<std::string> order) {
  std::vector<std::string> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != tree.codewords()) {
    throw error(errc::domain, "codeword order is not a permutation of the tree's codewords");
  }
  return MatcherCode(tree, std::move(order));
}

MatcherCode::MatcherCode(const CodeTree& tree, std::vector<std::string> order)
    : tree_(tree), m_(tree.m()), by_index_(std::move(order)), root_(new Node) {
  for (std::size_t k = 0; k < by_index_.size(); ++k) {
    Node* node = root_.get();
    for (char c : by_index_[k]) {
      auto& slot = node->child[c - '0'];
      if (!slot) slot = std::make_unique<Node>();
      node = slot.get();
    }
    node->index = static_cast<int>(k);
  }
}

MatcherCode::MatcherCode(const MatcherCode& other)
    : MatcherCode(other.tree_, other.by_index_) {}

MatcherCode::MatcherCode(MatcherCode&&) noexcept = default;

MatcherCode& MatcherCode::operator=(const MatcherCode& other) {
  if (this != &other) *this = MatcherCode(other);
  return *this;
}

MatcherCode& MatcherCode::operator=(MatcherCode&&) noexcept = default;

MatcherCode::~MatcherCode() = default;

const std::string& MatcherCode::codeword(std::size_t index) const {
  if (index >= by_index_.size()) {
    throw error(errc::domain, "codeword index out of range");
  }
  return by_index_[index];
}

BitVec MatcherCode::match_encode(std::span<const std::uint8_t> bits) const {
  std::size_t whole = bits.size() - bits.size() % static_cast<std::size_t>(m_);
  if (whole != bits.size()) {
    std::ostringstream os;
    os << "input of " << bits.size() << " bits is not a whole number of "
       << m_ << "-bit blocks";
    throw error(errc::length_not_multiple, os.str(), static_cast<std::int64_t>(whole));
  }
  BitVec out;
  std::size_t index = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    index = index * 2 + checked_bit(bits, i);
    if ((i + 1) % static_cast<std::size_t>(m_) == 0) {
      const std::string& w = by_index_[index];
      for (char c : w) out.push_back(static_cast<std::uint8_t>(c - '0'));
      index = 0;
    }
  }
  return out;
}

BitVec MatcherCode::match_decode(std::span<const std::uint8_t> bits) const {
  BitVec out;
  const Node* node = root_.get();
  std::size_t word_start = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    std::uint8_t b = checked_bit(bits, i);
    node = node->child[b].get();
    if (!node) {
      std::ostringstream os;
      os << "no codeword continues with bit " << static_cast<int>(b)
         << " at offset " << i;
      throw error(errc::invalid_symbol, os.str(), static_cast<std::int64_t>(i));
    }
    if (node->index >= 0) {
      append_index_bits(static_cast<std::size_t>(node->index), m_, &out);
      node = root_.get();
      word_start = i + 1;
    }
  }
  if (node != root_.get()) {
    std::ostringstream os;
    os << "stream ends inside a codeword that starts at offset " << word_start;
    throw error(errc::dangling_suffix, os.str(), static_cast<std::int64_t>(word_start));
  }
  return out;
}

SourceEncodeResult MatcherCode::source_encode(std::span<const std::uint8_t> bits) const {
  if (!tree_.is_complete()) {
    throw error(errc::not_complete,
                "source parsing needs a complete tree (Kraft sum " +
                    tree_.kraft_sum_string() + ")");
  }
  SourceEncodeResult res;
  const Node* node = root_.get();
  std::size_t word_start = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    std::uint8_t b = checked_bit(bits, i);
    node = node->child[b].get();
    if (!node) {
      // unreachable: a complete tree branches both ways everywhere
      throw error(errc::internal, "trie walk fell off a complete tree",
                  static_cast<std::int64_t>(i));
    }
    if (node->index >= 0) {
      append_index_bits(static_cast<std::size_t>(node->index), m_, &res.bits);
      node = root_.get();
      word_start = i + 1;
    }
  }
  res.consumed = word_start;
  return res;
}

BitVec MatcherCode::source_decode(std::span<const std::uint8_t> bits) const {
  std::size_t whole = bits.size() - bits.size() % static_cast<std::size_t>(m_);
  if (whole != bits.size()) {
    std::ostringstream os;
    os << "input of " << bits.size() << " bits is not a whole number of "
       << m_ << "-bit indices";
    throw error(errc::length_not_multiple, os.str(), static_cast<std::int64_t>(whole));
  }
  BitVec out;
  std::size_t index = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    index = index * 2 + checked_bit(bits, i);
    if ((i + 1) % static_cast<std::size_t>(m_) == 0) {
      const std::string& w = by_index_[index];
      for (char c : w) out.push_back(static_cast<std::uint8_t>(c - '0'));
      index = 0;
    }
  }
  return out;
}

std::string to_bit_string(std::span<const std::uint8_t> bits) {
  std::string s;
  s.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    s.push_back(static_cast<char>('0' + checked_bit(bits, i)));
  }
  return s;
}

BitVec from_bit_string(const std::string& s) {
  BitVec out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c != '0' && c != '1') {
      std::ostringstream os;
      os << "character '" << c << "' at position " << i << " is not a bit";
      throw error(errc::invalid_symbol, os.str(), static_cast<std::int64_t>(i));
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

}  // namespace f2vdm
