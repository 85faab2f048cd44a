#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "f2vdm.h"
#include "io.hpp"

// Exit codes: 0 success, 1 usage, 2 validation/codec/file error,
// 3 verification mismatch.

namespace {

struct ExitError {
  int code;
  std::string message;
};

void check(f2vdm_status status) {
  if (status == F2VDM_OK) return;
  std::ostringstream os;
  os << f2vdm_last_error() << " (" << f2vdm_status_name(status) << ")";
  if (f2vdm_last_error_bit() >= 0) os << " at bit " << f2vdm_last_error_bit();
  throw ExitError{2, os.str()};
}

struct TreeDeleter {
  void operator()(f2vdm_tree* t) const { f2vdm_tree_free(t); }
};
struct CodeDeleter {
  void operator()(f2vdm_code* c) const { f2vdm_code_free(c); }
};
struct ResultDeleter {
  void operator()(f2vdm_result* r) const { f2vdm_result_free(r); }
};
using TreePtr = std::unique_ptr<f2vdm_tree, TreeDeleter>;
using CodePtr = std::unique_ptr<f2vdm_code, CodeDeleter>;
using ResultPtr = std::unique_ptr<f2vdm_result, ResultDeleter>;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void kv(const std::string& key, const std::string& value) {
  std::cout << key << ' ' << value << '\n';
}

std::vector<std::string> tree_words(const f2vdm_tree* tree) {
  std::vector<std::string> words;
  size_t n = f2vdm_tree_leaf_count(tree);
  words.reserve(n);
  for (size_t k = 0; k < n; ++k) words.emplace_back(f2vdm_tree_codeword(tree, k));
  return words;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += words[i];
  }
  return out;
}

std::string kraft_string(const f2vdm_tree* tree) {
  size_t size = 0;
  check(f2vdm_tree_kraft_sum(tree, nullptr, &size));
  std::string s(size, '\0');
  check(f2vdm_tree_kraft_sum(tree, s.data(), &size));
  s.resize(size - 1);  // drop the terminator
  return s;
}

TreePtr tree_from_words(const std::vector<std::string>& words) {
  std::vector<const char*> ptrs;
  ptrs.reserve(words.size());
  for (const auto& w : words) ptrs.push_back(w.c_str());
  f2vdm_tree* raw = nullptr;
  check(f2vdm_tree_from_codewords(ptrs.data(), ptrs.size(), &raw));
  return TreePtr(raw);
}

// Tree + code from a loaded file; file order defines the index mapping.
struct LoadedCode {
  f2vdm::io::CodeFile file;
  TreePtr tree;
  CodePtr code;
};

LoadedCode load_code(const std::string& path) {
  LoadedCode lc;
  lc.file = f2vdm::io::load_code_file(path);
  if (std::fabs(lc.file.q0 + lc.file.q1 - 1.0) > 1e-9) {
    std::cerr << "warning: " << path << ": q = (" << fmt(lc.file.q0) << ", "
              << fmt(lc.file.q1) << ") does not sum to 1\n";
  }
  lc.tree = tree_from_words(lc.file.codewords);
  if (f2vdm_tree_m(lc.tree.get()) != lc.file.m) {
    std::ostringstream os;
    os << path << ": declares m = " << lc.file.m << " but "
       << lc.file.codewords.size() << " codewords imply m = "
       << f2vdm_tree_m(lc.tree.get());
    throw ExitError{2, os.str()};
  }
  std::vector<const char*> ptrs;
  ptrs.reserve(lc.file.codewords.size());
  for (const auto& w : lc.file.codewords) ptrs.push_back(w.c_str());
  f2vdm_code* raw = nullptr;
  check(f2vdm_code_with_order(lc.tree.get(), ptrs.data(), ptrs.size(), &raw));
  lc.code = CodePtr(raw);
  return lc;
}

f2vdm_tree_metrics metrics_of(const f2vdm_tree* tree, double q0, double q1) {
  f2vdm_tree_metrics m{};
  check(f2vdm_metrics(tree, q0, q1, &m));
  return m;
}

/* ---- build ---------------------------------------------------------------- */

void cmd_build(double q0, int m, const std::string& mode, double tol,
               const std::string& out_path) {
  double q1 = 1.0 - q0;
  TreePtr tree;
  ResultPtr result;
  if (mode == "matcher") {
    f2vdm_result* raw = nullptr;
    check(f2vdm_optimize(q0, q1, m, tol, &raw));
    result = ResultPtr(raw);
    tree = tree_from_words(tree_words(f2vdm_result_tree(raw)));
  } else {
    f2vdm_tree* raw = nullptr;
    check(f2vdm_tunstall_tree(q0, q1, m, &raw));
    tree = TreePtr(raw);
  }

  f2vdm_tree_metrics tm = metrics_of(tree.get(), q0, q1);
  kv("kind", "matcher");
  kv("mode", mode);
  kv("m", std::to_string(m));
  kv("q0", fmt(q0));
  kv("q1", fmt(q1));
  kv("codewords", join(tree_words(tree.get())));
  if (result) {
    kv("delta", fmt(f2vdm_result_delta(result.get())));
    kv("iterations", std::to_string(f2vdm_result_iterations(result.get())));
  } else {
    kv("delta", "null");
  }
  kv("expected_len", fmt(tm.expected_len));
  kv("idiv_match", fmt(tm.idiv_match));
  kv("idiv_per_output_bit", fmt(tm.normalized));
  if (tm.has_compress) {
    kv("idiv_compress_per_bit", fmt(tm.idiv_compress / m));
    kv("leaf_entropy_per_bit", fmt(tm.leaf_entropy / m));
  }
  kv("completeness_sufficient",
     f2vdm_completeness_sufficient(q0, q1) ? "yes" : "no");
  if (result) {
    int global = 0;
    check(f2vdm_global_optimality(q0, q1, f2vdm_result_delta(result.get()),
                                  &global));
    kv("global_optimality", global ? "yes" : "no");
  }

  f2vdm::io::CodeFile file;
  file.kind = "matcher";
  file.m = m;
  file.q0 = q0;
  file.q1 = q1;
  if (result) file.delta = f2vdm_result_delta(result.get());
  file.codewords = tree_words(tree.get());
  f2vdm::io::save_code_file(out_path, file);
  kv("wrote", out_path);
}

/* ---- encode / decode ------------------------------------------------------ */

using BitBuf = std::vector<std::uint8_t>;

BitBuf run_codec(const f2vdm_code* code, const std::string& direction,
                 const BitBuf& in, size_t* consumed) {
  auto two_call = [&](auto fn) {
    size_t size = 0;
    check(fn(nullptr, &size));
    BitBuf out(size);
    check(fn(out.empty() ? nullptr : out.data(), &size));
    out.resize(size);
    return out;
  };
  const std::uint8_t* data = in.empty() ? nullptr : in.data();
  if (direction == "match") {
    return two_call([&](std::uint8_t* out, size_t* size) {
      return f2vdm_match_encode(code, data, in.size(), out, size);
    });
  }
  if (direction == "unmatch") {
    return two_call([&](std::uint8_t* out, size_t* size) {
      return f2vdm_match_decode(code, data, in.size(), out, size);
    });
  }
  if (direction == "source-enc") {
    return two_call([&](std::uint8_t* out, size_t* size) {
      return f2vdm_source_encode(code, data, in.size(), out, size, consumed);
    });
  }
  return two_call([&](std::uint8_t* out, size_t* size) {
    return f2vdm_source_decode(code, data, in.size(), out, size);
  });
}

void cmd_transcode(const std::string& code_path, const std::string& in_path,
                   const std::string& out_path, const std::string& direction,
                   bool pad) {
  LoadedCode lc = load_code(code_path);
  BitBuf bits = f2vdm::io::load_bit_file(in_path);
  size_t in_bits = bits.size();

  size_t padded = 0;
  bool block_input = direction == "match" || direction == "source-dec";
  if (pad && block_input) {
    size_t m = static_cast<size_t>(lc.file.m);
    padded = (m - bits.size() % m) % m;
    bits.insert(bits.end(), padded, 0);
  }

  size_t consumed = 0;
  BitBuf out = run_codec(lc.code.get(), direction, bits, &consumed);
  f2vdm::io::save_bit_file(out_path, out);

  kv("direction", direction);
  kv("in_bits", std::to_string(in_bits));
  if (padded > 0) kv("padded_bits", std::to_string(padded));
  if (direction == "source-enc") kv("consumed_bits", std::to_string(consumed));
  kv("out_bits", std::to_string(out.size()));
  if (in_bits > 0) {
    kv("rate", fmt(static_cast<double>(out.size()) / static_cast<double>(in_bits)));
  }
  kv("wrote", out_path);
}

/* ---- stats ---------------------------------------------------------------- */

void cmd_stats(const std::string& code_path, bool as_json) {
  LoadedCode lc = load_code(code_path);
  const f2vdm_tree* tree = lc.tree.get();
  f2vdm_tree_metrics tm = metrics_of(tree, lc.file.q0, lc.file.q1);
  int m = lc.file.m;
  bool complete = f2vdm_tree_is_complete(tree) != 0;

  if (as_json) {
    nlohmann::json j;
    j["stats_version"] = 1;
    j["kind"] = lc.file.kind;
    j["m"] = m;
    j["q"] = {lc.file.q0, lc.file.q1};
    if (lc.file.delta.has_value()) {
      j["delta"] = *lc.file.delta;
    } else {
      j["delta"] = nullptr;
    }
    j["leaf_count"] = f2vdm_tree_leaf_count(tree);
    j["max_length"] = f2vdm_tree_max_length(tree);
    j["complete"] = complete;
    j["kraft_sum"] = kraft_string(tree);
    j["expected_len"] = tm.expected_len;
    j["idiv_match"] = tm.idiv_match;
    j["idiv_per_output_bit"] = tm.normalized;
    if (tm.has_compress) {
      j["idiv_compress_per_bit"] = tm.idiv_compress / m;
      j["leaf_entropy_per_bit"] = tm.leaf_entropy / m;
    }
    std::cout << j.dump(2) << '\n';
    return;
  }

  kv("kind", lc.file.kind);
  kv("m", std::to_string(m));
  kv("q0", fmt(lc.file.q0));
  kv("q1", fmt(lc.file.q1));
  kv("delta", lc.file.delta ? fmt(*lc.file.delta) : "null");
  kv("leaf_count", std::to_string(f2vdm_tree_leaf_count(tree)));
  kv("max_length", std::to_string(f2vdm_tree_max_length(tree)));
  kv("complete", complete ? "yes" : "no");
  kv("kraft_sum", kraft_string(tree));
  kv("expected_len", fmt(tm.expected_len));
  kv("idiv_match", fmt(tm.idiv_match));
  kv("idiv_per_output_bit", fmt(tm.normalized));
  if (tm.has_compress) {
    kv("idiv_compress_per_bit", fmt(tm.idiv_compress / m));
    kv("leaf_entropy_per_bit", fmt(tm.leaf_entropy / m));
  }
}

/* ---- sweep ---------------------------------------------------------------- */

int cmd_sweep(double q0, int m_max, double tol) {
  double q1 = 1.0 - q0;
  std::cout << "# f2vdm-sweep-v1\n";
  std::cout << "m,delta,bound,expected_len,iterations\n";
  int rc = 0;
  for (int m = 1; m <= m_max; ++m) {
    f2vdm_result* raw = nullptr;
    check(f2vdm_optimize(q0, q1, m, tol, &raw));
    ResultPtr result(raw);
    double delta = f2vdm_result_delta(raw);
    double bound = 0.0;
    check(f2vdm_perbit_bound(q0, q1, m, &bound));
    f2vdm_tree_metrics tm =
        metrics_of(f2vdm_result_tree(raw), q0, q1);
    std::cout << m << ',' << fmt(delta) << ',' << fmt(bound) << ','
              << fmt(tm.expected_len) << ','
              << f2vdm_result_iterations(raw) << '\n';
    if (delta > bound + 1e-12) {
      std::cerr << "error: m = " << m << ": delta " << fmt(delta)
                << " exceeds bound " << fmt(bound) << '\n';
      rc = 3;
    }
  }
  return rc;
}

/* ---- verify ---------------------------------------------------------------- */

class Verifier {
 public:
  void pass(const std::string& line) { std::cout << "[PASS] " << line << '\n'; }
  void fail(const std::string& line) {
    std::cout << "[FAIL] " << line << '\n';
    failed_ = true;
  }
  void info(const std::string& line) { std::cout << "[INFO] " << line << '\n'; }
  void expect(bool ok, const std::string& line) { ok ? pass(line) : fail(line); }
  void expect_near(const std::string& name, double actual, double expected,
                   double tol) {
    std::ostringstream os;
    os << name << " value=" << fmt(actual) << " expected=" << fmt(expected)
       << " tol=" << fmt(tol);
    expect(std::fabs(actual - expected) <= tol, os.str());
  }
  bool failed() const { return failed_; }

 private:
  bool failed_ = false;
};

int cmd_verify(double q0, int m, int depth_cap, double tol) {
  double q1 = 1.0 - q0;
  if (depth_cap == 0) depth_cap = 2 * m + 2;
  Verifier v;
  {
    std::ostringstream os;
    os << "q0=" << fmt(q0) << " q1=" << fmt(q1) << " m=" << m
       << " depth_cap=" << depth_cap;
    v.info(os.str());
  }

  // Tunstall greedy vs. exhaustive minimum of D(U_T||Q_T) over complete trees.
  f2vdm_tree* traw = nullptr;
  check(f2vdm_tunstall_tree(q0, q1, m, &traw));
  TreePtr tunstall(traw);
  f2vdm_tree_metrics tunstall_metrics = metrics_of(traw, q0, q1);
  double brute_match = 0.0;
  uint64_t complete_trees = 0;
  check(f2vdm_brute_min(F2VDM_ENUM_COMPLETE, 1 << m, 0, q0, q1,
                        F2VDM_OBJECTIVE_IDIV_MATCH, nullptr, &brute_match,
                        &complete_trees));
  {
    std::ostringstream os;
    os << "tunstall_optimal tunstall=" << fmt(tunstall_metrics.idiv_match)
       << " brute=" << fmt(brute_match) << " trees=" << complete_trees;
    v.expect(std::fabs(tunstall_metrics.idiv_match - brute_match) <= 1e-9,
             os.str());
  }

  // Iterated scaling vs. exhaustive minimum of D/E(L) over complete trees.
  f2vdm_result* rraw = nullptr;
  check(f2vdm_optimize(q0, q1, m, tol, &rraw));
  ResultPtr result(rraw);
  double delta = f2vdm_result_delta(rraw);
  double brute_delta = 0.0;
  check(f2vdm_brute_min(F2VDM_ENUM_COMPLETE, 1 << m, 0, q0, q1,
                        F2VDM_OBJECTIVE_NORMALIZED_IDIV, nullptr, &brute_delta,
                        nullptr));
  {
    std::ostringstream os;
    os << "delta_optimal delta=" << fmt(delta) << " brute=" << fmt(brute_delta);
    v.expect(std::fabs(delta - brute_delta) <= 1e-9, os.str());
  }

  // Depth-capped search over all prefix codes, complete or not.
  f2vdm_tree* wraw = nullptr;
  double capped_min = 0.0;
  uint64_t capped_trees = 0;
  check(f2vdm_brute_min(F2VDM_ENUM_PREFIX_FREE_CAPPED, 1 << m, depth_cap, q0,
                        q1, F2VDM_OBJECTIVE_NORMALIZED_IDIV, &wraw, &capped_min,
                        &capped_trees));
  TreePtr witness(wraw);
  {
    std::ostringstream os;
    os << "capped_search codes=" << capped_trees
       << " capped_min=" << fmt(capped_min) << " witness="
       << join(tree_words(wraw));
    v.info(os.str());
  }

  bool sufficient = f2vdm_completeness_sufficient(q0, q1) != 0;
  v.info(std::string("completeness_sufficient=") + (sufficient ? "yes" : "no"));
  bool beaten = capped_min < delta - 1e-9;
  if (sufficient) {
    std::ostringstream os;
    os << "capped_no_improvement capped_min=" << fmt(capped_min)
       << " delta=" << fmt(delta);
    v.expect(!beaten, os.str());
  } else {
    std::ostringstream os;
    os << "non_complete_better=" << (beaten ? "yes" : "no")
       << " capped_min=" << fmt(capped_min) << " delta=" << fmt(delta);
    v.info(os.str());
  }
  int global = 0;
  check(f2vdm_global_optimality(q0, q1, delta, &global));
  v.info(std::string("global_optimality=") + (global ? "yes" : "no"));

  // Reference values, checked when the inputs are the ones they belong to.
  auto matches = [&](double value) { return std::fabs(q0 - value) <= 1e-6; };
  if (matches(0.615) && m == 2) {
    v.expect_near("golden_delta", delta, 0.037695, 1e-4);
    v.expect_near("golden_tunstall_redundancy",
                  tunstall_metrics.idiv_compress / m, 0.038503, 2e-4);
    v.expect_near("golden_tunstall_matcher_divergence",
                  tunstall_metrics.normalized, 0.039206, 1e-4);
    f2vdm_tree_metrics rm = metrics_of(f2vdm_result_tree(rraw), q0, q1);
    v.expect_near("golden_alg1_redundancy", rm.idiv_compress / m, 0.04176,
                  2e-4);
    v.expect_near("golden_alg1_matcher_divergence", rm.normalized, 0.037695,
                  1e-4);
    std::vector<size_t> lengths;
    for (const auto& w : tree_words(f2vdm_result_tree(rraw))) {
      lengths.push_back(w.size());
    }
    std::sort(lengths.begin(), lengths.end());
    v.expect(lengths == std::vector<size_t>{1, 2, 3, 3},
             "golden_alg1_lengths 1,2,3,3");
  }
  if (matches(5.0 / 6.0) && m == 1) {
    v.expect_near("golden_complete_value", brute_delta, 0.424, 5e-4);
    TreePtr chain = tree_from_words({"0", "10"});
    f2vdm_tree_metrics cm = metrics_of(chain.get(), q0, q1);
    v.expect_near("golden_noncomplete_value", cm.normalized, 0.37034, 2e-4);
    if (depth_cap >= 3) {
      std::ostringstream os;
      os << "golden_capped_min capped_min=" << fmt(capped_min)
         << " limit=" << fmt(0.37034 + 2e-4);
      v.expect(capped_min <= 0.37034 + 2e-4, os.str());
    }
  }
  if (matches(2.0 / 3.0) && m == 2) {
    v.expect_near("golden_delta", delta, 0.02941, 1e-4);
  }

  kv("result", v.failed() ? "FAIL" : "PASS");
  return v.failed() ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"f2v distribution matching and v2f (Tunstall) source coding"};
  app.require_subcommand(1);
  int exit_code = 0;

  // build
  auto* build = app.add_subcommand("build", "Construct a code and write it as JSON");
  double b_q0 = 0.0;
  int b_m = 0;
  std::string b_mode = "matcher";
  double b_tol = 1e-12;
  std::string b_out;
  build->add_option("--q0", b_q0, "probability of symbol 0")
      ->required()
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
  build->add_option("--m", b_m, "input block length in bits")
      ->required()
      ->check(CLI::Range(1, 24));
  build->add_option("--mode", b_mode, "construction: matcher (iterated scaling) or tunstall")
      ->check(CLI::IsMember({"matcher", "tunstall"}));
  build->add_option("--tol", b_tol, "optimizer stopping tolerance")
      ->check(CLI::PositiveNumber);
  build->add_option("out", b_out, "output code file (JSON)")->required();
  build->callback([&] { cmd_build(b_q0, b_m, b_mode, b_tol, b_out); });

  // encode / decode
  std::string t_code, t_in, t_out, t_dir;
  bool t_pad = false;
  auto add_transcode = [&](const char* name, const char* help,
                           std::vector<std::string> dirs, std::string def) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("code", t_code, "code file (JSON)")->required();
    cmd->add_option("in", t_in, "input bit file")->required();
    cmd->add_option("out", t_out, "output bit file")->required();
    cmd->add_option("--mode", t_dir, "direction")->check(CLI::IsMember(dirs));
    cmd->add_flag("--pad", t_pad,
                  "zero-pad input to a whole number of m-bit blocks");
    cmd->callback([&, def] {
      cmd_transcode(t_code, t_in, t_out, t_dir.empty() ? def : t_dir, t_pad);
    });
    return cmd;
  };
  add_transcode("encode", "Apply a code in the encoding direction",
                {"match", "source-enc"}, "match");
  add_transcode("decode", "Apply a code in the decoding direction",
                {"unmatch", "source-dec"}, "unmatch");

  // stats
  auto* stats = app.add_subcommand("stats", "Print metrics for a code file");
  std::string s_code;
  bool s_json = false;
  stats->add_option("code", s_code, "code file (JSON)")->required();
  stats->add_flag("--json", s_json, "machine-readable output");
  stats->callback([&] { cmd_stats(s_code, s_json); });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "CSV of delta versus block length");
  double w_q0 = 0.0;
  int w_m_max = 0;
  double w_tol = 1e-12;
  sweep->add_option("--q0", w_q0, "probability of symbol 0")
      ->required()
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
  sweep->add_option("--m", w_m_max, "largest block length (sweeps 1..m)")
      ->required()
      ->check(CLI::Range(1, 20));
  sweep->add_option("--tol", w_tol, "optimizer stopping tolerance")
      ->check(CLI::PositiveNumber);
  sweep->callback([&] { exit_code = cmd_sweep(w_q0, w_m_max, w_tol); });

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Cross-check the constructions against brute force");
  double v_q0 = 0.0;
  int v_m = 0;
  int v_depth = 0;
  double v_tol = 1e-12;
  verify->add_option("--q0", v_q0, "probability of symbol 0")
      ->required()
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
  verify->add_option("--m", v_m, "input block length in bits")
      ->required()
      ->check(CLI::Range(1, 3));
  verify->add_option("--depth-cap", v_depth,
                     "codeword length cap for the non-complete search "
                     "(default 2m+2)")
      ->check(CLI::Range(1, 8));
  verify->add_option("--tol", v_tol, "optimizer stopping tolerance")
      ->check(CLI::PositiveNumber);
  verify->callback([&] { exit_code = cmd_verify(v_q0, v_m, v_depth, v_tol); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const ExitError& e) {
    if (!e.message.empty()) std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
