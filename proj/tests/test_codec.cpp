#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "checks.hpp"
#include "f2vdm/codec.hpp"
#include "helpers.hpp"

using f2vdm::BitVec;
using f2vdm::CodeTree;
using f2vdm::errc;
using f2vdm::from_bit_string;
using f2vdm::MatcherCode;
using f2vdm::to_bit_string;
using testhelp::expect_bit_error;
using testhelp::expect_error;

namespace {

CodeTree skew_tree() {
  return CodeTree::from_codewords({"000", "001", "01", "1"});
}

}  // namespace

TEST_CASE("codec: canonical index rule pairs numeric words with sorted "
          "codewords") {
  auto code = MatcherCode::from_tree(skew_tree());
  CHECK(code.m() == 2);
  CHECK(code.codeword(0) == "000");
  CHECK(code.codeword(1) == "001");
  CHECK(code.codeword(2) == "01");
  CHECK(code.codeword(3) == "1");
  expect_error(errc::domain, [&] { code.codeword(4); });
}

TEST_CASE("codec: match_encode substitutes each block's codeword") {
  auto code = MatcherCode::from_tree(skew_tree());
  CHECK(to_bit_string(code.match_encode(from_bit_string("0011"))) == "0001");
  CHECK(to_bit_string(code.match_encode(from_bit_string("00011011"))) ==
        "000001011");
  CHECK(code.match_encode({}).empty());
}

TEST_CASE("codec: match_decode inverts match_encode") {
  auto code = MatcherCode::from_tree(skew_tree());
  CHECK(to_bit_string(code.match_decode(from_bit_string("0001"))) == "0011");
  CHECK(to_bit_string(code.match_decode(from_bit_string("000001011"))) ==
        "00011011");
  CHECK(code.match_decode({}).empty());
}

TEST_CASE("codec: with_order pins an explicit index mapping") {
  auto code = MatcherCode::with_order(skew_tree(), {"1", "01", "001", "000"});
  CHECK(code.codeword(0) == "1");
  CHECK(code.codeword(3) == "000");
  CHECK(to_bit_string(code.match_encode(from_bit_string("00"))) == "1");
  CHECK(to_bit_string(code.match_decode(from_bit_string("1"))) == "00");
  CHECK(to_bit_string(code.match_encode(from_bit_string("0011"))) == "1000");

  expect_error(errc::domain, [] {
    MatcherCode::with_order(skew_tree(), {"000", "001", "01", "01"});
  });
  expect_error(errc::domain, [] {
    MatcherCode::with_order(skew_tree(), {"000", "001", "01", "11"});
  });
  expect_error(errc::domain, [] {
    MatcherCode::with_order(skew_tree(), {"000", "001", "01"});
  });
}

TEST_CASE("codec: source_encode parses whole codewords and reports consumed "
          "bits") {
  auto code = MatcherCode::from_tree(skew_tree());

  auto full = code.source_encode(from_bit_string("1000"));
  CHECK(to_bit_string(full.bits) == "1100");
  CHECK(full.consumed == 4);

  // Trailing "1" is itself a codeword, so the whole input parses.
  auto exact = code.source_encode(from_bit_string("10001"));
  CHECK(to_bit_string(exact.bits) == "110011");
  CHECK(exact.consumed == 5);

  // Trailing "0" stops inside the tree and stays unconsumed.
  auto partial = code.source_encode(from_bit_string("10000"));
  CHECK(to_bit_string(partial.bits) == "1100");
  CHECK(partial.consumed == 4);

  auto none = code.source_encode(from_bit_string("00"));
  CHECK(none.bits.empty());
  CHECK(none.consumed == 0);

  auto empty = code.source_encode({});
  CHECK(empty.bits.empty());
  CHECK(empty.consumed == 0);
}

TEST_CASE("codec: source_decode concatenates the indexed codewords") {
  auto code = MatcherCode::from_tree(skew_tree());
  CHECK(to_bit_string(code.source_decode(from_bit_string("1100"))) == "1000");
  CHECK(to_bit_string(code.source_decode(from_bit_string("0001"))) ==
        "000001");
  CHECK(code.source_decode({}).empty());
}

TEST_CASE("codec: source parsing requires a complete tree") {
  auto open = MatcherCode::from_tree(CodeTree::from_codewords({"0", "10"}));
  expect_error(errc::not_complete,
               [&] { open.source_encode(from_bit_string("0")); });
  expect_error(errc::not_complete, [&] { open.source_encode({}); });
  // Decoding indices needs no parse, so a non-complete tree is fine there.
  CHECK(to_bit_string(open.source_decode(from_bit_string("1"))) == "10");
}

TEST_CASE("codec: bitstream errors carry the offending offset") {
  auto code = MatcherCode::from_tree(skew_tree());

  expect_bit_error(errc::length_not_multiple, 2,
                   [&] { code.match_encode(from_bit_string("001")); });
  expect_bit_error(errc::length_not_multiple, 2,
                   [&] { code.source_decode(from_bit_string("011")); });
  expect_bit_error(errc::dangling_suffix, 0,
                   [&] { code.match_decode(from_bit_string("0")); });
  // "01" parses, then "0" starts a new codeword that never finishes.
  expect_bit_error(errc::dangling_suffix, 2,
                   [&] { code.match_decode(from_bit_string("010")); });

  auto open = MatcherCode::from_tree(CodeTree::from_codewords({"0", "10"}));
  expect_bit_error(errc::invalid_symbol, 1,
                   [&] { open.match_decode(from_bit_string("11")); });

  // Bytes other than 0/1 are rejected where they sit.
  auto pair = MatcherCode::from_tree(CodeTree::from_codewords({"0", "1"}));
  expect_bit_error(errc::invalid_symbol, 1,
                   [&] { pair.match_encode(BitVec{0, 2}); });
  expect_bit_error(errc::invalid_symbol, 0,
                   [&] { pair.match_decode(BitVec{255}); });
}

TEST_CASE("codec: bit string conversions") {
  CHECK(to_bit_string(BitVec{1, 0, 1}) == "101");
  CHECK(to_bit_string(BitVec{}).empty());
  CHECK(from_bit_string("0110") == BitVec{0, 1, 1, 0});
  CHECK(from_bit_string("").empty());
  expect_bit_error(errc::invalid_symbol, 2,
                   [] { from_bit_string("01x1"); });
  expect_bit_error(errc::invalid_symbol, 1, [] {
    to_bit_string(BitVec{0, 7});
  });
}

TEST_CASE("codec: copies are deep") {
  MatcherCode copy = [] {
    auto original = MatcherCode::from_tree(skew_tree());
    MatcherCode c = original;  // copy, then let the original die
    return c;
  }();
  CHECK(to_bit_string(copy.match_encode(from_bit_string("0011"))) == "0001");

  auto a = MatcherCode::from_tree(skew_tree());
  auto b = MatcherCode::from_tree(CodeTree::from_codewords({"0", "1"}));
  b = a;
  CHECK(b.m() == 2);
  CHECK(to_bit_string(b.match_decode(from_bit_string("1"))) == "11");
}

TEST_CASE("codec: randomized match and source round trips") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 1 + static_cast<int>(rng() % 5);
    auto tree = testhelp::random_complete_tree(rng, m);

    // Half the trials shuffle the index mapping.
    MatcherCode code = [&] {
      if (trial % 2 == 0) return MatcherCode::from_tree(tree);
      auto order = tree.codewords();
      std::shuffle(order.begin(), order.end(), rng);
      return MatcherCode::with_order(tree, std::move(order));
    }();

    std::size_t blocks = rng() % 40;
    auto input = testhelp::random_bits(rng, blocks * m);
    auto matched = code.match_encode(input);
    CHECK(code.match_decode(matched) == input);

    auto source = testhelp::random_bits(rng, rng() % 120);
    auto parsed = code.source_encode(source);
    BitVec head(source.begin(),
                source.begin() + static_cast<std::ptrdiff_t>(parsed.consumed));
    CHECK(code.source_decode(parsed.bits) == head);
    CHECK(parsed.consumed <= source.size());
    CHECK(parsed.bits.size() % static_cast<std::size_t>(m) == 0);
  }
}

TEST_CASE("codec: a matcher shapes uniform input toward the target "
          "distribution") {
  // Feeding fair-coin blocks through the (2/3, 1/3) matcher must produce
  // roughly two-thirds zeros. Per uniform 2-bit block: zeros have mean 1.5,
  // variance 1.25; lengths mean 2.25, variance 0.6875. The fixed seed keeps
  // the 3-sigma assertions deterministic.
  auto code = MatcherCode::from_tree(skew_tree());
  std::mt19937_64 rng(271828);
  const std::size_t n_blocks = 100000;
  auto input = testhelp::random_bits(rng, 2 * n_blocks);
  auto output = code.match_encode(input);

  double zeros = 0;
  for (auto b : output) zeros += (b == 0);
  double len = static_cast<double>(output.size());
  double n = static_cast<double>(n_blocks);

  CHECK(std::fabs(zeros - 1.5 * n) <= 3.0 * std::sqrt(1.25 * n));
  CHECK(std::fabs(len - 2.25 * n) <= 3.0 * std::sqrt(0.6875 * n));
  CHECK(std::fabs(zeros / len - 2.0 / 3.0) <= 0.01);
}
