#include "f2vdm/optimizer.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

#include "f2vdm/metrics.hpp"
#include "f2vdm/tunstall.hpp"

namespace f2vdm {

OptimizerResult optimize_matcher(const BinaryWeights& dist, int m, double tol) {
  if (!dist.is_distribution()) {
    throw error(errc::not_a_distribution, "matcher optimization needs a true distribution");
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw error(errc::domain, "tolerance must be a positive finite number");
  }

  std::vector<OptimizerTraceEntry> trace;
  CodeTree current = tunstall_build(dist, m);

  // delta_hat strictly decreases while the objective stays negative, and
  // there are finitely many complete trees, so termination is guaranteed;
  // the guard only exists to surface a broken invariant.
  std::uint64_t guard = std::uint64_t{1} << (m + 4);
  for (std::uint64_t iter = 0; iter < guard; ++iter) {
    double delta_hat = normalized_idiv(current, dist);
    CodeTree next = tunstall_build(dist.scaled(delta_hat), m);
    double objective =
        idiv_match(next, dist) - delta_hat * expected_length(next);
    trace.push_back(OptimizerTraceEntry{delta_hat, next, objective});
    if (objective >= -tol || next == current) {
      int iterations = static_cast<int>(trace.size());
      return OptimizerResult{delta_hat, std::move(next), std::move(trace),
                             iterations};
    }
    current = std::move(next);
  }
  throw error(errc::internal, "matcher optimization failed to converge");
}

bool completeness_sufficient(const BinaryWeights& dist) {
  return dist.max_weight() <= 4.0 * dist.min_weight();
}

bool global_optimality_check(const BinaryWeights& dist, double delta) {
  if (!std::isfinite(delta) || delta < 0.0) {
    throw error(errc::domain, "delta must be finite and >= 0");
  }
  return dist.max_weight() * std::exp2(delta) <= 1.0 + 1e-12;
}

double perbit_bound(const BinaryWeights& dist, int m) {
  if (!dist.is_distribution()) {
    throw error(errc::not_a_distribution, "per-bit bound needs a true distribution");
  }
  if (m < 1) {
    throw error(errc::domain, "block length must be >= 1");
  }
  double log2_min = dist.w0() < dist.w1() ? dist.log2_w0() : dist.log2_w1();
  return -log2_min / m;
}

}  // namespace f2vdm
