#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace f2vdm {

enum class errc {
  ok = 0,
  domain,              // nonpositive/non-finite weight, bad argument value
  prefix_violation,    // some codeword is a prefix of another
  bad_count,           // codeword count is not 2^m with m >= 1
  empty_word,
  not_complete,
  not_a_distribution,
  m_too_large,
  length_not_multiple,
  dangling_suffix,     // stream ends inside a codeword
  invalid_symbol,      // stream diverges from every codeword
  too_large,           // enumeration limits exceeded
  overflow,
  internal,
};

const char* errc_name(errc code);

// Library-wide exception. bit_offset() is >= 0 only for bitstream codec
// errors, where it points at the offending input bit.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what, std::int64_t bit_offset = -1)
      : std::runtime_error(what), code_(code), bit_offset_(bit_offset) {}

  errc code() const noexcept { return code_; }
  std::int64_t bit_offset() const noexcept { return bit_offset_; }

 private:
  errc code_;
  std::int64_t bit_offset_;
};

}  // namespace f2vdm
