#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "checks.hpp"
#include "helpers.hpp"
#include "io.hpp"

namespace io = f2vdm::io;
using testhelp::TempDir;

namespace {

template <typename F>
void expect_io_error(const std::string& fragment, F&& fn) {
  try {
    fn();
    FAIL_CHECK("expected std::runtime_error containing \"" << fragment
                                                           << "\"");
  } catch (const std::runtime_error& e) {
    CHECK_MESSAGE(std::string(e.what()).find(fragment) != std::string::npos,
                  "message \"" << e.what() << "\" lacks \"" << fragment
                               << "\"");
  }
}

}  // namespace

TEST_CASE("io: bit packing is MSB-first with a zero-padded tail") {
  CHECK(io::pack_bits({1, 0, 1, 1, 0, 0, 1, 0}) ==
        std::vector<std::uint8_t>{0xb2});
  CHECK(io::pack_bits({1}) == std::vector<std::uint8_t>{0x80});
  CHECK(io::pack_bits({0, 0, 0, 1}) == std::vector<std::uint8_t>{0x10});
  CHECK(io::pack_bits({1, 0, 1, 1}) == std::vector<std::uint8_t>{0xb0});
  CHECK(io::pack_bits({}).empty());
  CHECK(io::pack_bits(std::vector<std::uint8_t>(9, 1)) ==
        std::vector<std::uint8_t>{0xff, 0x80});
  expect_io_error("bit value 2", [] { io::pack_bits({0, 2}); });
}

TEST_CASE("io: unpack is the exact inverse and pins the byte count") {
  std::mt19937_64 rng(12);
  for (std::size_t n = 0; n <= 70; ++n) {
    auto bits = testhelp::random_bits(rng, n);
    CHECK(io::unpack_bits(io::pack_bits(bits), n) == bits);
  }

  CHECK(io::unpack_bits({}, 0).empty());
  expect_io_error("does not fit", [] { io::unpack_bits({0x00}, 9); });
  expect_io_error("does not fit", [] { io::unpack_bits({0x00, 0x00}, 8); });
  expect_io_error("does not fit", [] { io::unpack_bits({0x00}, 0); });
}

TEST_CASE("io: bit file round trip and layout") {
  TempDir dir("f2vdm_io_bits");
  std::string path = dir.path("bits.f2vm");

  io::save_bit_file(path, {1, 0, 1, 1});
  std::string raw = testhelp::read_file(path);
  REQUIRE(raw.size() == 14);
  CHECK(raw.substr(0, 4) == "F2VM");
  CHECK(raw[4] == 1);
  CHECK(raw[5] == 4);  // bit count, little-endian
  for (int i = 6; i < 13; ++i) CHECK(raw[i] == 0);
  CHECK(static_cast<unsigned char>(raw[13]) == 0xb0);

  CHECK(io::load_bit_file(path) == std::vector<std::uint8_t>{1, 0, 1, 1});

  io::save_bit_file(path, {});
  CHECK(testhelp::read_file(path).size() == 13);
  CHECK(io::load_bit_file(path).empty());

  std::mt19937_64 rng(99);
  for (std::size_t n : {1u, 7u, 8u, 9u, 64u, 1000u}) {
    auto bits = testhelp::random_bits(rng, n);
    io::save_bit_file(path, bits);
    CHECK(io::load_bit_file(path) == bits);
  }
}

TEST_CASE("io: bit file error handling") {
  TempDir dir("f2vdm_io_biterr");
  std::string path = dir.path("broken.f2vm");

  expect_io_error("cannot open",
                  [&] { io::load_bit_file(dir.path("missing.f2vm")); });

  testhelp::write_file(path, "F2V");
  expect_io_error("truncated header", [&] { io::load_bit_file(path); });

  testhelp::write_file(path, std::string("XXXX") + std::string(9, '\0'));
  expect_io_error("bad magic", [&] { io::load_bit_file(path); });

  std::string bad_version = "F2VM";
  bad_version += static_cast<char>(2);
  bad_version += std::string(8, '\0');
  testhelp::write_file(path, bad_version);
  expect_io_error("unsupported version", [&] { io::load_bit_file(path); });

  // Declared count does not match the payload size.
  std::string bad_count = "F2VM";
  bad_count += static_cast<char>(1);
  bad_count += static_cast<char>(9);  // 9 bits ...
  bad_count += std::string(7, '\0');
  bad_count += static_cast<char>(0xff);  // ... but one payload byte
  testhelp::write_file(path, bad_count);
  expect_io_error("does not fit", [&] { io::load_bit_file(path); });
}

TEST_CASE("io: code file round trip preserves order and delta") {
  TempDir dir("f2vdm_io_code");
  std::string path = dir.path("code.json");

  io::CodeFile file;
  file.kind = "matcher";
  file.m = 2;
  file.q0 = 0.615;
  file.q1 = 0.385;
  file.delta = 0.0376954504;
  file.codewords = {"1", "01", "001", "000"};  // file order is index order
  io::save_code_file(path, file);

  auto loaded = io::load_code_file(path);
  CHECK(loaded.format_version == 1);
  CHECK(loaded.kind == "matcher");
  CHECK(loaded.m == 2);
  CHECK(loaded.q0 == 0.615);
  CHECK(loaded.q1 == 0.385);
  REQUIRE(loaded.delta.has_value());
  CHECK(*loaded.delta == 0.0376954504);
  CHECK(loaded.codewords ==
        std::vector<std::string>{"1", "01", "001", "000"});

  file.kind = "source";
  file.delta.reset();
  io::save_code_file(path, file);
  auto plain = io::load_code_file(path);
  CHECK(plain.kind == "source");
  CHECK_FALSE(plain.delta.has_value());
}

TEST_CASE("io: code file validation") {
  TempDir dir("f2vdm_io_codeerr");
  std::string path = dir.path("code.json");

  expect_io_error("cannot open",
                  [&] { io::load_code_file(dir.path("missing.json")); });

  testhelp::write_file(path, "{ not json");
  expect_io_error("invalid JSON", [&] { io::load_code_file(path); });

  auto base = [] {
    return std::string(
        R"({"format_version": 1, "kind": "matcher", "m": 1, )"
        R"("q": [0.5, 0.5], "delta": null, "codewords": ["0", "1"]})");
  };

  testhelp::write_file(path, base());
  CHECK(io::load_code_file(path).codewords.size() == 2);

  auto mutate = [&](const std::string& from, const std::string& to) {
    std::string text = base();
    text.replace(text.find(from), from.size(), to);
    testhelp::write_file(path, text);
  };

  mutate("\"format_version\": 1", "\"format_version\": 2");
  expect_io_error("unsupported format_version",
                  [&] { io::load_code_file(path); });

  mutate("\"kind\": \"matcher\"", "\"kind\": \"other\"");
  expect_io_error("kind must be", [&] { io::load_code_file(path); });

  mutate("[0.5, 0.5]", "[0.5]");
  expect_io_error("array of two", [&] { io::load_code_file(path); });

  mutate("[0.5, 0.5]", "[0.5, -0.5]");
  expect_io_error("must be positive", [&] { io::load_code_file(path); });

  mutate(", \"codewords\": [\"0\", \"1\"]", "");
  expect_io_error("bad code file", [&] { io::load_code_file(path); });
}
