#pragma once

#include <Eigen/Dense>

#include "ncqm/superoperator.hpp"

namespace ncqm {

// Closed-form solution of the isotropic oscillator H = P^2/2m + m omega^2 X^2/2.
// The scalar functions accept theta >= 0 (theta = 0 is the commutative limit);
// anything that needs operators goes through a FockContext and so theta > 0.

struct Lambdas {
  double lambda1 = 0.0;  // >= lambda2
  double lambda2 = 0.0;
};

/// Throws DegenerateOscillatorError for omega == 0 and ConfigError for other
/// invalid parameters (cutoff is not checked).
void validate_oscillator(const ModelParams& p);

/// lambda_{1,2} = (1/2)(+-m^2 omega^2 theta + m omega sqrt(4 hbar^2 + m^2 omega^2 theta^2)).
Lambdas lambdas(const ModelParams& p);

/// alpha = ln(1 - theta lambda2 / hbar^2), cross-checked against
/// -ln(1 + theta lambda1 / hbar^2) to 1e-12 relative (ConsistencyError otherwise).
double alpha(const ModelParams& p);

struct Normalizers {
  double k1 = 0.0;  // lambda1 (2 lambda1 theta / hbar^2 + 4)
  double k2 = 0.0;  // lambda2 (4 - 2 lambda2 theta / hbar^2)
};
Normalizers normalizers(const ModelParams& p);

struct BogoliubovTransform {
  Eigen::Matrix4cd g;  // [Z_i, Z_j] for Z = (m omega X1, m omega X2, P1, P2)
  Eigen::Matrix4cd s;
  Eigen::Vector4d eigenvalues;  // (lambda1, -lambda1, lambda2, -lambda2) from the eigensolver
  double sgs_residual = 0.0;     // max |S g S^dag - diag(1, -1, 1, -1)|
  double lambda_residual = 0.0;  // max relative gap to lambdas(p)
};

/// Columns of S^dag are the normalized eigenvectors of g over sqrt|eigenvalue|,
/// each phase-fixed so its largest component is real and positive.
BogoliubovTransform bogoliubov_transform(const ModelParams& p);

struct LadderOps {
  SuperOperator a1, a1dag, a2, a2dag;
};

/// A1 = (-(l1/hbar)(X1 + i X2) - i P1 + P2) / sqrt(K1),
/// A2 = ((l2/hbar)(X1 - i X2) + i P1 + P2) / sqrt(K2), and their adjoints.
LadderOps ladder_ops(const FockContext& ctx);

/// Smallest cutoff with exp(2 alpha (N - 1)) < 1e-12.
Index min_ground_cutoff(const ModelParams& p);

/// Normalized diag(exp(alpha n)). Throws TruncationError below min_ground_cutoff.
QuantumState ground_state(const FockContext& ctx);
/// Normalized A1dag^n1 A2dag^n2 psi0.
QuantumState excited_state(const FockContext& ctx, int n1, int n2);

/// (lambda1 (2 n1 + 1) + lambda2 (2 n2 + 1)) / 2m.
double energy(const ModelParams& p, int n1, int n2);

/// Normalized ground-state density c/(2 pi theta) exp(-c |z|^2) with
/// c = 2s - s^2, s = theta lambda2 / hbar^2. Needs theta > 0.
double ground_probability(const ModelParams& p, Complex z);

/// The same density summed term by term from the Gaussian symbol
/// exp(-s |z|^2): sum_k s^(2k) |z|^(2k) / k! exp(-2 s |z|^2), scaled by c/(2 pi theta).
double ground_probability_series(const ModelParams& p, Complex z);

/// ln P(r) - ln P(0) as a function of the physical radius; finite at theta = 0
/// where it equals -m omega r^2 / hbar.
double ground_log_shape(const ModelParams& p, double r);

struct OscillatorSolution {
  Lambdas lambdas;
  double alpha = 0.0;
  Normalizers k;
  LadderOps ladders;
};

OscillatorSolution solve_oscillator(const FockContext& ctx);

}  // namespace ncqm
