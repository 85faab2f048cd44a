#pragma once

// Independent reference implementations for cross-checking the library.
// Everything here deliberately works in the linear domain with naive
// formulas and naive algorithms — if the library and these agree, neither is
// likely to repeat the other's mistake.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "f2vdm/code_tree.hpp"

namespace testhelp {

inline double leaf_prob(const std::string& word, double w0, double w1) {
  double p = 1.0;
  for (char c : word) p *= (c == '0' ? w0 : w1);
  return p;
}

inline double naive_expected_len(const std::vector<std::string>& words) {
  double total = 0.0;
  for (const auto& w : words) total += static_cast<double>(w.size());
  return total / static_cast<double>(words.size());
}

// D(U_T || Q_T) summed leaf by leaf in linear probabilities.
inline double naive_idiv_match(const std::vector<std::string>& words,
                               double w0, double w1) {
  double n = static_cast<double>(words.size());
  double sum = 0.0;
  for (const auto& w : words) {
    sum += (1.0 / n) * std::log2((1.0 / n) / leaf_prob(w, w0, w1));
  }
  return sum;
}

// D(Q_T || U_T); only meaningful when the leaf probabilities sum to one.
inline double naive_idiv_compress(const std::vector<std::string>& words,
                                  double w0, double w1) {
  double n = static_cast<double>(words.size());
  double sum = 0.0;
  for (const auto& w : words) {
    double p = leaf_prob(w, w0, w1);
    sum += p * std::log2(p * n);
  }
  return sum;
}

inline double naive_leaf_entropy(const std::vector<std::string>& words,
                                 double w0, double w1) {
  double sum = 0.0;
  for (const auto& w : words) {
    double p = leaf_prob(w, w0, w1);
    sum -= p * std::log2(p);
  }
  return sum;
}

inline double naive_kraft(const std::vector<std::string>& words) {
  double sum = 0.0;
  for (const auto& w : words) sum += std::exp2(-static_cast<double>(w.size()));
  return sum;
}

inline bool naive_prefix_free(const std::vector<std::string>& words) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (i == j) continue;
      if (words[j].size() >= words[i].size() &&
          words[j].compare(0, words[i].size(), words[i]) == 0) {
        return false;
      }
    }
  }
  return true;
}

// Catalan numbers via the exact stepwise recurrence C(k) = C(k-1)*2(2k-1)/(k+1).
inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 1; k <= n; ++k) {
    c = c * 2 * (2 * static_cast<std::uint64_t>(k) - 1) /
        (static_cast<std::uint64_t>(k) + 1);
  }
  return c;
}

// Number of prefix codes with n words of length <= depth, counted by a
// generating-polynomial recursion over antichains: with r levels below a
// node, S_0(x) = 1 + x and S_r(x) = x + S_{r-1}(x)^2 (choose the node, or
// recurse into both children); the root itself cannot be a word, so the
// answer is [x^n] S_{depth-1}(x)^2.
inline std::uint64_t count_prefix_codes(int n, int depth) {
  std::size_t max_deg = static_cast<std::size_t>(n);
  auto square = [&](const std::vector<std::uint64_t>& p) {
    std::vector<std::uint64_t> out(max_deg + 1, 0);
    for (std::size_t a = 0; a <= max_deg; ++a) {
      for (std::size_t b = 0; a + b <= max_deg; ++b) {
        out[a + b] += p[a] * p[b];
      }
    }
    return out;
  };
  std::vector<std::uint64_t> s(max_deg + 1, 0);
  s[0] = 1;
  if (max_deg >= 1) s[1] = 1;  // S_0 = 1 + x
  for (int r = 1; r <= depth - 1; ++r) {
    s = square(s);
    if (max_deg >= 1) s[1] += 1;  // S_r = x + (previous)^2
  }
  return square(s)[max_deg];
}

inline double random_q0(std::mt19937_64& rng, double lo = 0.05,
                        double hi = 0.95) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Uniformly random *shape*: expand a uniformly chosen leaf until the tree
// has 2^m of them. Not the Catalan distribution, but it reaches skewed and
// balanced shapes alike, which is all the property tests need.
inline f2vdm::CodeTree random_complete_tree(std::mt19937_64& rng, int m) {
  std::vector<std::string> leaves{""};
  std::size_t target = std::size_t{1} << m;
  while (leaves.size() < target) {
    std::size_t i =
        std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng);
    std::string prefix = leaves[i];
    leaves[i] = prefix + '0';
    leaves.push_back(prefix + '1');
  }
  return f2vdm::CodeTree::from_codewords(std::move(leaves));
}

inline std::vector<std::uint8_t> random_bits(std::mt19937_64& rng,
                                             std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  std::bernoulli_distribution coin(0.5);
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  return bits;
}

// Scratch directory under the system temp dir, wiped on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    dir_ = std::filesystem::temp_directory_path() /
           (tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }

 private:
  std::filesystem::path dir_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

#ifdef F2VDM_CLI_PATH
// Runs the CLI binary with the given arguments, capturing exit code, stdout
// and stderr. Arguments must not contain single quotes.
struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

inline CliResult run_cli(const std::vector<std::string>& args,
                         const TempDir& dir, const std::string& tag) {
  std::string out_path = dir.path(tag + ".stdout");
  std::string err_path = dir.path(tag + ".stderr");
  std::ostringstream cmd;
  cmd << '\'' << F2VDM_CLI_PATH << '\'';
  for (const auto& a : args) cmd << " '" << a << '\'';
  cmd << " > '" << out_path << "' 2> '" << err_path << '\'';
  int rc = std::system(cmd.str().c_str());
  CliResult res;
  res.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  res.out = read_file(out_path);
  res.err = read_file(err_path);
  return res;
}
#endif  // F2VDM_CLI_PATH

}  // namespace testhelp
