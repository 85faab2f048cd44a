#include "io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace f2vdm::io {

namespace {

using nlohmann::json;

[[noreturn]] void bail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

std::vector<std::uint8_t> read_all(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bail(path, "cannot open for reading");
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) bail(path, "read failed");
  return data;
}

void write_all(const std::string& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) bail(path, "cannot open for writing");
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) bail(path, "write failed");
}

}  // namespace

CodeFile load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bail(path, "cannot open for reading");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    bail(path, std::string("invalid JSON: ") + e.what());
  }

  CodeFile file;
  try {
    file.format_version = j.at("format_version").get<int>();
    if (file.format_version != 1) {
      bail(path, "unsupported format_version " + std::to_string(file.format_version));
    }
    file.kind = j.at("kind").get<std::string>();
    if (file.kind != "matcher" && file.kind != "source") {
      bail(path, "kind must be \"matcher\" or \"source\", got \"" + file.kind + "\"");
    }
    file.m = j.at("m").get<int>();
    const json& q = j.at("q");
    if (!q.is_array() || q.size() != 2) bail(path, "q must be an array of two numbers");
    file.q0 = q[0].get<double>();
    file.q1 = q[1].get<double>();
    if (!(file.q0 > 0.0) || !(file.q1 > 0.0)) bail(path, "q entries must be positive");
    const json& delta = j.at("delta");
    if (!delta.is_null()) file.delta = delta.get<double>();
    file.codewords = j.at("codewords").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    bail(path, std::string("bad code file: ") + e.what());
  }
  return file;
}

void save_code_file(const std::string& path, const CodeFile& file) {
  json j;
  j["format_version"] = file.format_version;
  j["kind"] = file.kind;
  j["m"] = file.m;
  j["q"] = {file.q0, file.q1};
  if (file.delta.has_value()) {
    j["delta"] = *file.delta;
  } else {
    j["delta"] = nullptr;
  }
  j["codewords"] = file.codewords;
  std::string text = j.dump(2);
  text.push_back('\n');
  write_all(path, text.data(), text.size());
}

std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& bits) {
  std::vector<std::uint8_t> payload((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) {
      throw std::runtime_error("bit value " + std::to_string(bits[i]) +
                               " at offset " + std::to_string(i));
    }
    payload[i / 8] |= static_cast<std::uint8_t>(bits[i] << (7 - i % 8));
  }
  return payload;
}

std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint8_t>& payload,
                                      std::uint64_t bit_count) {
  if (bit_count > 8 * payload.size() ||
      (bit_count + 8 <= 8 * payload.size())) {
    throw std::runtime_error("bit count " + std::to_string(bit_count) +
                             " does not fit " + std::to_string(payload.size()) +
                             " payload bytes");
  }
  std::vector<std::uint8_t> bits(bit_count);
  for (std::uint64_t i = 0; i < bit_count; ++i) {
    bits[i] = (payload[i / 8] >> (7 - i % 8)) & 1;
  }
  return bits;
}

std::vector<std::uint8_t> load_bit_file(const std::string& path) {
  std::vector<std::uint8_t> data = read_all(path);
  constexpr std::size_t header_size = 4 + 1 + 8;
  if (data.size() < header_size) bail(path, "truncated header");
  if (std::memcmp(data.data(), kBitFileMagic, 4) != 0) bail(path, "bad magic");
  if (data[4] != kBitFileVersion) {
    bail(path, "unsupported version " + std::to_string(data[4]));
  }
  std::uint64_t bit_count = 0;
  for (int i = 0; i < 8; ++i) {
    bit_count |= static_cast<std::uint64_t>(data[5 + i]) << (8 * i);
  }
  std::vector<std::uint8_t> payload(data.begin() + header_size, data.end());
  try {
    return unpack_bits(payload, bit_count);
  } catch (const std::runtime_error& e) {
    bail(path, e.what());
  }
}

void save_bit_file(const std::string& path, const std::vector<std::uint8_t>& bits) {
  std::vector<std::uint8_t> out;
  out.reserve(13 + (bits.size() + 7) / 8);
  out.insert(out.end(), kBitFileMagic, kBitFileMagic + 4);
  out.push_back(kBitFileVersion);
  std::uint64_t bit_count = bits.size();
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<std::uint8_t>((bit_count >> (8 * i)) & 0xff));
  }
  std::vector<std::uint8_t> payload = pack_bits(bits);
  out.insert(out.end(), payload.begin(), payload.end());
  write_all(path, out.data(), out.size());
}

}  // namespace f2vdm::io
