#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "f2vdm/code_tree.hpp"

namespace f2vdm {

// Bits travel through the codec unpacked, one byte per bit, each 0 or 1.
// Packing into real bytes is a storage concern and lives with the file I/O.
using BitVec = std::vector<std::uint8_t>;

struct SourceEncodeResult {
  BitVec bits;                 // concatenated m-bit indices
  std::size_t consumed;        // input bits consumed; the rest had no full codeword
};

// A one-to-one map between the 2^m m-bit words and the leaves of a code
// tree, usable in both directions:
//
//   matcher:      m-bit blocks -> codewords   (match_encode / match_decode)
//   source code:  codewords -> m-bit blocks   (source_encode / source_decode)
//
// from_tree() numbers the canonically sorted codewords 0..2^m-1 and pairs
// the k-th m-bit word (numeric order) with the k-th codeword. with_order()
// instead takes the codewords in a caller-chosen order, pairing the k-th
// word with order[k]; the set must be exactly the tree's codewords.
class MatcherCode {
 public:
  static MatcherCode from_tree(const CodeTree& tree);
  static MatcherCode with_order(const CodeTree& tree, std::vector<std::string> order);

  MatcherCode(const MatcherCode&);
  MatcherCode(MatcherCode&&) noexcept;
  MatcherCode& operator=(const MatcherCode&);
  MatcherCode& operator=(MatcherCode&&) noexcept;
  ~MatcherCode();

  int m() const { return m_; }
  const CodeTree& tree() const { return tree_; }
  // Codeword for the k-th m-bit word, k in [0, 2^m).
  const std::string& codeword(std::size_t index) const;

  // Splits the input into m-bit blocks and substitutes each block's
  // codeword. Throws errc::length_not_multiple (with the offending bit
  // offset) if the input is not a whole number of blocks, errc::invalid_symbol
  // on a byte that is neither 0 nor 1.
  BitVec match_encode(std::span<const std::uint8_t> bits) const;

  // Inverse of match_encode: parses the input as a concatenation of
  // codewords and emits each one's m-bit index. Throws
  // errc::invalid_symbol on a bad byte and errc::dangling_suffix if the
  // input ends inside a codeword; both carry the bit offset.
  BitVec match_decode(std::span<const std::uint8_t> bits) const;

  // Parses as many whole codewords as the input covers and emits their
  // m-bit indices; a trailing partial codeword is left unconsumed rather
  // than being an error. Only a complete tree parses every source
  // losslessly, so a non-complete tree throws errc::not_complete up front.
  SourceEncodeResult source_encode(std::span<const std::uint8_t> bits) const;

  // Inverse of source_encode: reads m-bit indices and concatenates their
  // codewords. Throws errc::length_not_multiple if the input is not a
  // whole number of indices.
  BitVec source_decode(std::span<const std::uint8_t> bits) const;

 private:
  struct Node;
  MatcherCode(const CodeTree& tree, std::vector<std::string> order);

  CodeTree tree_;
  int m_;
  std::vector<std::string> by_index_;    // index -> codeword
  std::unique_ptr<Node> root_;           // codeword trie, leaves hold the index
};

// "0110..." <-> unpacked bits; the string form appears in CLI output and
// test fixtures. from_bit_string throws errc::invalid_symbol on anything
// but '0'/'1'.
std::string to_bit_string(std::span<const std::uint8_t> bits);
BitVec from_bit_string(const std::string& s);

}  // namespace f2vdm
