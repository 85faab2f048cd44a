#pragma once

#include "f2vdm/errors.hpp"

namespace f2vdm {

// A pair of strictly positive weights over the binary alphabet. Not required
// to sum to one; is_distribution() reports whether it does (within 1e-12).
// Base-2 logs are cached at construction since all tree arithmetic runs in
// the log2 domain. Immutable.
class BinaryWeights {
 public:
  static constexpr double kDistributionTol = 1e-12;

  // Throws errc::domain unless both weights are finite and > 0.
  static BinaryWeights make(double w0, double w1);

  double w0() const noexcept { return w0_; }
  double w1() const noexcept { return w1_; }
  double log2_w0() const noexcept { return log2_w0_; }
  double log2_w1() const noexcept { return log2_w1_; }
  bool is_distribution() const noexcept { return is_distribution_; }

  double min_weight() const noexcept { return w0_ < w1_ ? w0_ : w1_; }
  double max_weight() const noexcept { return w0_ < w1_ ? w1_ : w0_; }

  // (w0 * 2^delta, w1 * 2^delta). Throws errc::overflow when a scaled weight
  // leaves the representable positive range.
  BinaryWeights scaled(double delta) const;

 private:
  BinaryWeights(double w0, double w1);

  double w0_;
  double w1_;
  double log2_w0_;
  double log2_w1_;
  bool is_distribution_;
};

inline BinaryWeights scale_weights(const BinaryWeights& w, double delta) {
  return w.scaled(delta);
}

}  // namespace f2vdm
