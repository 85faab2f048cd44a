#include "f2vdm/errors.hpp"

namespace f2vdm {

const char* errc_name(errc code) {
  switch (code) {
    case errc::ok: return "ok";
    case errc::domain: return "domain";
    case errc::prefix_violation: return "prefix_violation";
    case errc::bad_count: return "bad_count";
    case errc::empty_word: return "empty_word";
    case errc::not_complete: return "not_complete";
    case errc::not_a_distribution: return "not_a_distribution";
    case errc::m_too_large: return "m_too_large";
    case errc::length_not_multiple: return "length_not_multiple";
    case errc::dangling_suffix: return "dangling_suffix";
    case errc::invalid_symbol: return "invalid_symbol";
    case errc::too_large: return "too_large";
    case errc::overflow: return "overflow";
    case errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace f2vdm
