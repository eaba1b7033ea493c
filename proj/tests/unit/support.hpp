#pragma once

#include <random>

#include "ncqm/state.hpp"

namespace ncqm::test {

// Seeded state with Gaussian entries on the top-left support x support block.
inline QuantumState seeded_state(Index dim, Index support, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ConfigOperator op = ConfigOperator::Zero(dim, dim);
  for (Index m = 0; m < support; ++m)
    for (Index n = 0; n < support; ++n) {
      const double re = g(rng);
      op(m, n) = Complex(re, g(rng));
    }
  return QuantumState(op / op.norm());
}

inline double gap(const QuantumState& a, const QuantumState& b) {
  return (a.op() - b.op()).norm() / std::max({a.op().norm(), b.op().norm(), 1e-300});
}

// <z| as the first `count` amplitudes exp(-|z|^2/2) z^n / sqrt(n!), computed by recurrence.
inline CVector coherent_ket(Complex z, Index count) {
  CVector u(count);
  u(0) = std::exp(-0.5 * std::norm(z));
  for (Index n = 1; n < count; ++n) u(n) = u(n - 1) * z / std::sqrt(static_cast<double>(n));
  return u;
}

}  // namespace ncqm::test
