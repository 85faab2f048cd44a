#include "f2vdm.h"

#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "f2vdm/codec.hpp"
#include "f2vdm/code_tree.hpp"
#include "f2vdm/errors.hpp"
#include "f2vdm/metrics.hpp"
#include "f2vdm/optimizer.hpp"
#include "f2vdm/oracle.hpp"
#include "f2vdm/tunstall.hpp"
#include "f2vdm/weights.hpp"

struct f2vdm_tree {
  f2vdm::CodeTree tree;
};

struct f2vdm_code {
  f2vdm::MatcherCode code;
  f2vdm_tree tree_handle;  // borrowed out through f2vdm_code_tree
};

struct f2vdm_result {
  f2vdm::OptimizerResult res;
  f2vdm_tree tree_handle;  // borrowed out through f2vdm_result_tree
};

namespace {

thread_local std::string t_last_error;
thread_local int64_t t_last_error_bit = -1;

f2vdm_status status_from(f2vdm::errc code) {
  using f2vdm::errc;
  switch (code) {
    case errc::ok: return F2VDM_OK;
    case errc::domain: return F2VDM_ERR_DOMAIN;
    case errc::prefix_violation: return F2VDM_ERR_PREFIX_VIOLATION;
    case errc::bad_count: return F2VDM_ERR_BAD_COUNT;
    case errc::empty_word: return F2VDM_ERR_EMPTY_WORD;
    case errc::not_complete: return F2VDM_ERR_NOT_COMPLETE;
    case errc::not_a_distribution: return F2VDM_ERR_NOT_A_DISTRIBUTION;
    case errc::m_too_large: return F2VDM_ERR_M_TOO_LARGE;
    case errc::length_not_multiple: return F2VDM_ERR_LENGTH_NOT_MULTIPLE;
    case errc::dangling_suffix: return F2VDM_ERR_DANGLING_SUFFIX;
    case errc::invalid_symbol: return F2VDM_ERR_INVALID_SYMBOL;
    case errc::too_large: return F2VDM_ERR_TOO_LARGE;
    case errc::overflow: return F2VDM_ERR_OVERFLOW;
    case errc::internal: return F2VDM_ERR_INTERNAL;
  }
  return F2VDM_ERR_INTERNAL;
}

f2vdm_status fail(f2vdm_status status, const char* message) {
  t_last_error = message;
  t_last_error_bit = -1;
  return status;
}

// Runs the body, translating exceptions into status codes and stashing the
// thread-local error context.
template <typename F>
f2vdm_status guarded(F&& body) {
  try {
    t_last_error.clear();
    t_last_error_bit = -1;
    return body();
  } catch (const f2vdm::error& e) {
    t_last_error = e.what();
    t_last_error_bit = e.bit_offset();
    return status_from(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    t_last_error_bit = -1;
    return F2VDM_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    t_last_error_bit = -1;
    return F2VDM_ERR_INTERNAL;
  }
}

// Two-call sizing for bit buffers: out == NULL asks for the size only.
f2vdm_status deliver_bits(const f2vdm::BitVec& bits, uint8_t* out,
                          size_t* out_size) {
  if (out_size == nullptr) {
    return fail(F2VDM_ERR_NULL_ARGUMENT, "out_size is NULL");
  }
  if (out == nullptr) {
    *out_size = bits.size();
    return F2VDM_OK;
  }
  if (*out_size < bits.size()) {
    *out_size = bits.size();
    return fail(F2VDM_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  }
  if (!bits.empty()) std::memcpy(out, bits.data(), bits.size());
  *out_size = bits.size();
  return F2VDM_OK;
}

std::vector<std::string> collect_words(const char* const* words, size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (words[i] == nullptr) {
      throw f2vdm::error(f2vdm::errc::domain, "codeword pointer is NULL");
    }
    out.emplace_back(words[i]);
  }
  return out;
}

}  // namespace

extern "C" {

const char* f2vdm_version(void) { return "1.0.0"; }

const char* f2vdm_status_name(f2vdm_status status) {
  switch (status) {
    case F2VDM_OK: return "ok";
    case F2VDM_ERR_DOMAIN: return "domain";
    case F2VDM_ERR_PREFIX_VIOLATION: return "prefix_violation";
    case F2VDM_ERR_BAD_COUNT: return "bad_count";
    case F2VDM_ERR_EMPTY_WORD: return "empty_word";
    case F2VDM_ERR_NOT_COMPLETE: return "not_complete";
    case F2VDM_ERR_NOT_A_DISTRIBUTION: return "not_a_distribution";
    case F2VDM_ERR_M_TOO_LARGE: return "m_too_large";
    case F2VDM_ERR_LENGTH_NOT_MULTIPLE: return "length_not_multiple";
    case F2VDM_ERR_DANGLING_SUFFIX: return "dangling_suffix";
    case F2VDM_ERR_INVALID_SYMBOL: return "invalid_symbol";
    case F2VDM_ERR_TOO_LARGE: return "too_large";
    case F2VDM_ERR_OVERFLOW: return "overflow";
    case F2VDM_ERR_INTERNAL: return "internal";
    case F2VDM_ERR_NULL_ARGUMENT: return "null_argument";
    case F2VDM_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
  }
  return "unknown";
}

const char* f2vdm_last_error(void) { return t_last_error.c_str(); }

int64_t f2vdm_last_error_bit(void) { return t_last_error_bit; }

/* ---- trees ---------------------------------------------------------------- */

f2vdm_status f2vdm_tree_from_codewords(const char* const* words, size_t count,
                                       f2vdm_tree** out) {
  if (out == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "out is NULL");
  if (words == nullptr && count > 0) {
    return fail(F2VDM_ERR_NULL_ARGUMENT, "words is NULL");
  }
  return guarded([&] {
    auto tree = f2vdm::CodeTree::from_codewords(collect_words(words, count));
    *out = new f2vdm_tree{std::move(tree)};
    return F2VDM_OK;
  });
}

f2vdm_status f2vdm_tunstall_tree(double w0, double w1, int m, f2vdm_tree** out) {
  if (out == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "out is NULL");
  return guarded([&] {
    auto weights = f2vdm::BinaryWeights::make(w0, w1);
    *out = new f2vdm_tree{f2vdm::tunstall_build(weights, m)};
    return F2VDM_OK;
  });
}

void f2vdm_tree_free(f2vdm_tree* tree) { delete tree; }

int f2vdm_tree_m(const f2vdm_tree* tree) { return tree ? tree->tree.m() : 0; }

size_t f2vdm_tree_leaf_count(const f2vdm_tree* tree) {
  return tree ? tree->tree.leaf_count() : 0;
}

int f2vdm_tree_max_length(const f2vdm_tree* tree) {
  return tree ? tree->tree.max_length() : 0;
}

int f2vdm_tree_is_complete(const f2vdm_tree* tree) {
  return tree && tree->tree.is_complete() ? 1 : 0;
}

const char* f2vdm_tree_codeword(const f2vdm_tree* tree, size_t k) {
  if (tree == nullptr || k >= tree->tree.leaf_count()) return nullptr;
  return tree->tree.codewords()[k].c_str();
}

f2vdm_status f2vdm_tree_kraft_sum(const f2vdm_tree* tree, char* out,
                                  size_t* out_size) {
  if (tree == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "tree is NULL");
  if (out_size == nullptr) {
    return fail(F2VDM_ERR_NULL_ARGUMENT, "out_size is NULL");
  }
  const std::string& s = tree->tree.kraft_sum_string();
  size_t required = s.size() + 1;
  if (out == nullptr) {
    *out_size = required;
    return F2VDM_OK;
  }
  if (*out_size < required) {
    *out_size = required;
    return fail(F2VDM_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  }
  std::memcpy(out, s.c_str(), required);
  *out_size = required;
  return F2VDM_OK;
}

/* ---- divergence metrics --------------------------------------------------- */

f2vdm_status f2vdm_metrics(const f2vdm_tree* tree, double w0, double w1,
                           f2vdm_tree_metrics* out) {
  if (tree == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "tree is NULL");
  if (out == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "out is NULL");
  return guarded([&] {
    auto weights = f2vdm::BinaryWeights::make(w0, w1);
    auto m = f2vdm::tree_metrics(tree->tree, weights);
    out->idiv_match = m.idiv_match;
    out->expected_len = m.expected_len;
    out->normalized = m.normalized;
    out->has_compress = m.idiv_compress.has_value() ? 1 : 0;
    out->idiv_compress = m.idiv_compress.value_or(0.0);
    out->leaf_entropy = m.leaf_entropy.value_or(0.0);
    return F2VDM_OK;
  });
}

/* ---- matcher optimization ------------------------------------------------- */

f2vdm_status f2vdm_optimize(double w0, double w1, int m, double tol,
                            f2vdm_result** out) {
  if (out == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "out is NULL");
  return guarded([&] {
    auto weights = f2vdm::BinaryWeights::make(w0, w1);
    auto res = f2vdm::optimize_matcher(weights, m, tol);
    f2vdm::CodeTree tree = res.tree;
    *out = new f2vdm_result{std::move(res), f2vdm_tree{std::move(tree)}};
    return F2VDM_OK;
  });
}

void f2vdm_result_free(f2vdm_result* result) { delete result; }

double f2vdm_result_delta(const f2vdm_result* result) {
  return result ? result->res.delta : 0.0;
}

int f2vdm_result_iterations(const f2vdm_result* result) {
  return result ? result->res.iterations : 0;
}

const f2vdm_tree* f2vdm_result_tree(const f2vdm_result* result) {
  return result ? &result->tree_handle : nullptr;
}

f2vdm_status f2vdm_result_trace(const f2vdm_result* result, int index,
                                double* delta_hat, double* objective) {
  if (result == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "result is NULL");
  if (index < 0 || index >= result->res.iterations) {
    return fail(F2VDM_ERR_DOMAIN, "trace index out of range");
  }
  const auto& entry = result->res.trace[static_cast<size_t>(index)];
  if (delta_hat != nullptr) *delta_hat = entry.delta_hat;
  if (objective != nullptr) *objective = entry.objective;
  return F2VDM_OK;
}

int f2vdm_completeness_sufficient(double w0, double w1) {
  try {
    auto weights = f2vdm::BinaryWeights::make(w0, w1);
    return f2vdm::completeness_sufficient(weights) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

f2vdm_status f2vdm_global_optimality(double w0, double w1, double delta,
                                     int* out) {
  if (out == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "out is NULL");
  return guarded([&] {
    auto weights = f2vdm::BinaryWeights::make(w0, w1);
    *out = f2vdm::global_optimality_check(weights, delta) ? 1 : 0;
    return F2VDM_OK;
  });
}

f2vdm_status f2vdm_perbit_bound(double w0, double w1, int m, double* out) {
  if (out == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "out is NULL");
  return guarded([&] {
    auto weights = f2vdm::BinaryWeights::make(w0, w1);
    *out = f2vdm::perbit_bound(weights, m);
    return F2VDM_OK;
  });
}

/* ---- brute-force certification -------------------------------------------- */

f2vdm_status f2vdm_brute_min(f2vdm_enum_mode mode, int num_leaves,
                             int max_depth, double w0, double w1,
                             f2vdm_objective objective, f2vdm_tree** out_tree,
                             double* out_value, uint64_t* out_visited) {
  return guarded([&]() -> f2vdm_status {
    f2vdm::EnumerationSpec spec;
    spec.num_leaves = num_leaves;
    spec.max_depth = max_depth;
    switch (mode) {
      case F2VDM_ENUM_COMPLETE:
        spec.mode = f2vdm::EnumMode::complete;
        break;
      case F2VDM_ENUM_PREFIX_FREE_CAPPED:
        spec.mode = f2vdm::EnumMode::prefix_free_capped;
        break;
      default:
        return fail(F2VDM_ERR_DOMAIN, "unknown enumeration mode");
    }
    f2vdm::Objective obj;
    switch (objective) {
      case F2VDM_OBJECTIVE_IDIV_MATCH:
        obj = f2vdm::Objective::idiv_match;
        break;
      case F2VDM_OBJECTIVE_NORMALIZED_IDIV:
        obj = f2vdm::Objective::normalized_idiv;
        break;
      case F2VDM_OBJECTIVE_IDIV_COMPRESS:
        obj = f2vdm::Objective::idiv_compress;
        break;
      default:
        return fail(F2VDM_ERR_DOMAIN, "unknown objective");
    }
    auto weights = f2vdm::BinaryWeights::make(w0, w1);
    auto res = f2vdm::brute_min(spec, weights, obj);
    if (out_value != nullptr) *out_value = res.value;
    if (out_visited != nullptr) *out_visited = res.trees_visited;
    if (out_tree != nullptr) *out_tree = new f2vdm_tree{std::move(res.tree)};
    return F2VDM_OK;
  });
}

/* ---- codecs ---------------------------------------------------------------- */

f2vdm_status f2vdm_code_from_tree(const f2vdm_tree* tree, f2vdm_code** out) {
  if (tree == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "tree is NULL");
  if (out == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "out is NULL");
  return guarded([&] {
    auto code = f2vdm::MatcherCode::from_tree(tree->tree);
    f2vdm::CodeTree copy = code.tree();
    *out = new f2vdm_code{std::move(code), f2vdm_tree{std::move(copy)}};
    return F2VDM_OK;
  });
}

f2vdm_status f2vdm_code_with_order(const f2vdm_tree* tree,
                                   const char* const* order, size_t count,
                                   f2vdm_code** out) {
  if (tree == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "tree is NULL");
  if (out == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "out is NULL");
  if (order == nullptr && count > 0) {
    return fail(F2VDM_ERR_NULL_ARGUMENT, "order is NULL");
  }
  return guarded([&] {
    auto code =
        f2vdm::MatcherCode::with_order(tree->tree, collect_words(order, count));
    f2vdm::CodeTree copy = code.tree();
    *out = new f2vdm_code{std::move(code), f2vdm_tree{std::move(copy)}};
    return F2VDM_OK;
  });
}

void f2vdm_code_free(f2vdm_code* code) { delete code; }

int f2vdm_code_m(const f2vdm_code* code) { return code ? code->code.m() : 0; }

const f2vdm_tree* f2vdm_code_tree(const f2vdm_code* code) {
  return code ? &code->tree_handle : nullptr;
}

const char* f2vdm_code_codeword(const f2vdm_code* code, size_t k) {
  if (code == nullptr || k >= code->code.tree().leaf_count()) return nullptr;
  return code->code.codeword(k).c_str();
}

f2vdm_status f2vdm_match_encode(const f2vdm_code* code, const uint8_t* in,
                                size_t in_size, uint8_t* out,
                                size_t* out_size) {
  if (code == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "code is NULL");
  if (in == nullptr && in_size > 0) {
    return fail(F2VDM_ERR_NULL_ARGUMENT, "in is NULL");
  }
  return guarded([&] {
    auto bits = code->code.match_encode({in, in_size});
    return deliver_bits(bits, out, out_size);
  });
}

f2vdm_status f2vdm_match_decode(const f2vdm_code* code, const uint8_t* in,
                                size_t in_size, uint8_t* out,
                                size_t* out_size) {
  if (code == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "code is NULL");
  if (in == nullptr && in_size > 0) {
    return fail(F2VDM_ERR_NULL_ARGUMENT, "in is NULL");
  }
  return guarded([&] {
    auto bits = code->code.match_decode({in, in_size});
    return deliver_bits(bits, out, out_size);
  });
}

f2vdm_status f2vdm_source_encode(const f2vdm_code* code, const uint8_t* in,
                                 size_t in_size, uint8_t* out, size_t* out_size,
                                 size_t* consumed) {
  if (code == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "code is NULL");
  if (in == nullptr && in_size > 0) {
    return fail(F2VDM_ERR_NULL_ARGUMENT, "in is NULL");
  }
  return guarded([&] {
    auto res = code->code.source_encode({in, in_size});
    f2vdm_status rc = deliver_bits(res.bits, out, out_size);
    if (rc == F2VDM_OK && consumed != nullptr) *consumed = res.consumed;
    return rc;
  });
}

f2vdm_status f2vdm_source_decode(const f2vdm_code* code, const uint8_t* in,
                                 size_t in_size, uint8_t* out,
                                 size_t* out_size) {
  if (code == nullptr) return fail(F2VDM_ERR_NULL_ARGUMENT, "code is NULL");
  if (in == nullptr && in_size > 0) {
    return fail(F2VDM_ERR_NULL_ARGUMENT, "in is NULL");
  }
  return guarded([&] {
    auto bits = code->code.source_decode({in, in_size});
    return deliver_bits(bits, out, out_size);
  });
}

} /* extern "C" */
