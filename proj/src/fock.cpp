#include "ncqm/fock.hpp"

#include <cmath>
#include <string>

#include "ncqm/error.hpp"

namespace ncqm {

void ModelParams::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(theta)) throw ConfigError("theta must be positive, got " + std::to_string(theta));
  if (!positive(hbar)) throw ConfigError("hbar must be positive, got " + std::to_string(hbar));
  if (!positive(mass)) throw ConfigError("mass must be positive, got " + std::to_string(mass));
  if (!std::isfinite(omega) || omega < 0.0)
    throw ConfigError("omega must be non-negative, got " + std::to_string(omega));
  if (cutoff < 2) throw ConfigError("cutoff must be at least 2, got " + std::to_string(cutoff));
}

FockContext::FockContext(const ModelParams& params) : params_(params) {
  params_.validate();
  const Index n = params_.cutoff;
  b_ = ConfigOperator::Zero(n, n);
  for (Index k = 1; k < n; ++k) b_(k - 1, k) = std::sqrt(static_cast<double>(k));
  bdag_ = b_.adjoint();
  const double s = std::sqrt(params_.theta / 2.0);
  x1_ = s * (b_ + bdag_);
  x2_ = kI * s * (bdag_ - b_);
  identity_ = ConfigOperator::Identity(n, n);
  number_ = ConfigOperator::Zero(n, n);
  for (Index k = 0; k < n; ++k) number_(k, k) = static_cast<double>(k);
}

FockContext build_fock(const ModelParams& params) { return FockContext(params); }

}  // namespace ncqm
