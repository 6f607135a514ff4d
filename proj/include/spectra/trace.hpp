// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spectra/linalg.hpp"
#include "spectra/quadrature.hpp"

namespace spectra {

enum class ProbeDistribution { rademacher, gaussian };

/// Real random probe with zero mean and identity covariance, drawn from a
/// dedicated stream so that probe i is reproducible independent of evaluation
/// order. Streams are mt19937_64 engines seeded through a splitmix64
/// finalizer over (seed, stream); variates are built from raw engine bits so
/// results do not depend on the standard library's distribution internals.
struct ProbeVector {
  std::vector<double> values;
  ProbeDistribution distribution = ProbeDistribution::rademacher;
  std::uint64_t stream = 0;
};

struct ProbeRng {
  std::uint64_t seed = 0;
  ProbeDistribution distribution = ProbeDistribution::rademacher;
};

ProbeVector sample_probe(int n, const ProbeRng& rng, std::uint64_t stream);

/// splitmix64-mixed stream seed, exposed for components that need their own
/// reproducible engines keyed off the same master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

struct ProjectorApplication {
  std::vector<cplx> s;               // filtered projector applied to the probe
  std::vector<std::vector<cplx>> xs; // resolvent solves per node, k = 0..N-1
};

/// Applies the quadrature-filtered projector to real vectors. Factors the
/// N/2 upper-half-plane shifted systems once; each application solves the
/// factored system for x_k and its adjoint for x_{N-1-k}, then accumulates
/// s = sum_k w_k x_k.
class FilteredProjector {
 public:
  FilteredProjector(const HermitianOperator& a, ContourQuadrature q);
  ProjectorApplication apply(std::span<const double> v) const;
  const ContourQuadrature& quadrature() const { return quad_; }
  int dim() const { return dim_; }

 private:
  int dim_;
  ContourQuadrature quad_;
  std::vector<LuFactors> factors_;  // one per node k < N/2
};

/// One-shot convenience around FilteredProjector.
ProjectorApplication apply_filtered_projector(const HermitianOperator& a, const ContourQuadrature& q,
                                              const ProbeVector& v);

/// Stochastic estimates of the filtered trace. mu averages v^H s (whose real
/// part estimates the eigenvalue count); nu averages ||s||^2. Standard errors
/// are sample standard deviation / sqrt(count); for the complex mu samples the
/// standard deviation is sqrt(sum |x_i - mean|^2 / (count - 1)).
struct EstimatorResult {
  cplx mu_estimate{0.0, 0.0};
  double nu_estimate = 0.0;
  std::vector<cplx> mu_samples;
  std::vector<double> nu_samples;
  std::size_t sample_count = 0;
  double mu_stderr = 0.0;
  double nu_stderr = 0.0;
};

EstimatorResult estimate_mu(const HermitianOperator& a, const ContourQuadrature& q, int probe_count,
                            const ProbeRng& rng);
EstimatorResult estimate_nu(const HermitianOperator& a, const ContourQuadrature& q, int probe_count,
                            const ProbeRng& rng);

/// Eigenvalue-based oracles: sum of filter values / squared filter values.
cplx exact_mu(const EigenDecomposition& eigs, const ContourQuadrature& q);
double exact_nu(const EigenDecomposition& eigs, const ContourQuadrature& q);

inline constexpr int kDenseProjectorDimCap = 128;

/// Brute-force oracle: materialize sum_k w_k (z_k I - A)^{-1} by explicit
/// inversion (capped at dim 128). Throws DimensionTooLarge.
std::vector<cplx> filtered_projector_dense(const HermitianOperator& a, const ContourQuadrature& q);

/// Trace of the materialized filtered projector.
cplx exact_trace_direct(const HermitianOperator& a, const ContourQuadrature& q);

}  // namespace spectra
