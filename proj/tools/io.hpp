#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

// File plumbing for the CLI: code descriptions as JSON, bitstreams as packed
// binary. Self-contained on purpose — the library proper never touches disk,
// and these helpers never touch the library. All failures throw
// std::runtime_error with the path in the message.

namespace f2vdm::io {

// On-disk description of a code. The codeword list keeps *file order*, and
// file order is the index order: the k-th entry pairs with the k-th m-bit
// word. A freshly built file stores canonical order; a hand-written file may
// order the words to pin any index mapping it likes.
struct CodeFile {
  int format_version = 1;
  std::string kind;  // "matcher" | "source"
  int m = 0;
  double q0 = 0.0;
  double q1 = 0.0;
  std::optional<double> delta;  // absent (null) when no optimization ran
  std::vector<std::string> codewords;
};

CodeFile load_code_file(const std::string& path);
void save_code_file(const std::string& path, const CodeFile& file);

// Bitstream container: magic "F2VM", one version byte, the exact bit count
// as a 64-bit little-endian integer, then the bits packed MSB-first with the
// final byte zero-padded. The bit count pins the payload size to the byte:
// count <= 8 * payload_bytes < count + 8.
inline constexpr char kBitFileMagic[4] = {'F', '2', 'V', 'M'};
inline constexpr std::uint8_t kBitFileVersion = 1;

// Bits travel unpacked (one byte per bit, each 0 or 1), matching the codec
// API; packing exists only inside these two calls.
std::vector<std::uint8_t> load_bit_file(const std::string& path);
void save_bit_file(const std::string& path, const std::vector<std::uint8_t>& bits);

// The packing layer behind the file format, exposed for direct testing.
std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint8_t>& payload,
                                      std::uint64_t bit_count);

}  // namespace f2vdm::io
