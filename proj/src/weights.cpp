#include "f2vdm/weights.hpp"

#include <cmath>
#include <sstream>

namespace f2vdm {

BinaryWeights BinaryWeights::make(double w0, double w1) {
  for (double w : {w0, w1}) {
    if (!std::isfinite(w) || w <= 0.0) {
      std::ostringstream os;
      os << "weight " << w << " is not a finite positive number";
      throw error(errc::domain, os.str());
    }
  }
  return BinaryWeights(w0, w1);
}

BinaryWeights::BinaryWeights(double w0, double w1)
    : w0_(w0),
      w1_(w1),
      log2_w0_(std::log2(w0)),
      log2_w1_(std::log2(w1)),
      is_distribution_(std::fabs(w0 + w1 - 1.0) <= kDistributionTol) {}

BinaryWeights BinaryWeights::scaled(double delta) const {
  if (!std::isfinite(delta)) {
    throw error(errc::domain, "scale exponent is not finite");
  }
  double factor = std::exp2(delta);
  double s0 = w0_ * factor;
  double s1 = w1_ * factor;
  if (!std::isfinite(s0) || !std::isfinite(s1) || s0 <= 0.0 || s1 <= 0.0) {
    std::ostringstream os;
    os << "scaling by 2^" << delta << " leaves the representable range";
    throw error(errc::overflow, os.str());
  }
  return BinaryWeights(s0, s1);
}

}  // namespace f2vdm
