// SPDX-License-Identifier: Apache-2.0

#include "spectra/trace.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "spectra/errors.hpp"
#include "spectra/kernels.hpp"

namespace spectra {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// [0, 1) from the top 53 bits
double to_unit(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream * 0xD2B74407B1CE6E93ULL + 1));
}

ProbeVector sample_probe(int n, const ProbeRng& rng, std::uint64_t stream) {
  if (n < 1) {
    throw InputError("probe dimension must be at least 1");
  }
  std::mt19937_64 engine(mix_seed(rng.seed, stream));
  ProbeVector v;
  v.distribution = rng.distribution;
  v.stream = stream;
  v.values.resize(n);
  if (rng.distribution == ProbeDistribution::rademacher) {
    for (double& e : v.values) {
      e = (engine() & 1ULL) ? 1.0 : -1.0;
    }
  } else {
    // Box-Muller; one uniform pair yields two normals.
    int i = 0;
    while (i < n) {
      const double u1 = 1.0 - to_unit(engine());  // (0, 1]
      const double u2 = to_unit(engine());
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double a = 2.0 * std::numbers::pi * u2;
      v.values[i++] = r * std::cos(a);
      if (i < n) {
        v.values[i++] = r * std::sin(a);
      }
    }
  }
  return v;
}

FilteredProjector::FilteredProjector(const HermitianOperator& a, ContourQuadrature q)
    : dim_(a.dim()), quad_(std::move(q)) {
  factors_.reserve(quad_.node_count / 2);
  for (int k = 0; k < quad_.node_count / 2; ++k) {
    factors_.push_back(LuFactors::shifted(a, quad_.nodes[k]));
  }
}

ProjectorApplication FilteredProjector::apply(std::span<const double> v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw DimensionMismatch("probe length does not match operator dimension");
  }
  const int n_nodes = quad_.node_count;
  std::vector<cplx> rhs(v.begin(), v.end());
  ProjectorApplication out;
  out.xs.resize(n_nodes);
  out.s.assign(dim_, cplx(0.0));
  for (int k = 0; k < n_nodes / 2; ++k) {
    // (z_{N-1-k} I - A) = (z_k I - A)^H, so the factorization serves both nodes.
    out.xs[k] = factors_[k].solve(rhs);
    out.xs[n_nodes - 1 - k] = factors_[k].solve_adjoint(rhs);
  }
  for (int k = 0; k < n_nodes; ++k) {
    kernels::axpy(quad_.weights[k], out.xs[k].data(), out.s.data(), out.s.size());
  }
  return out;
}

ProjectorApplication apply_filtered_projector(const HermitianOperator& a, const ContourQuadrature& q,
                                              const ProbeVector& v) {
  return FilteredProjector(a, q).apply(v.values);
}

namespace {

EstimatorResult run_estimator(const HermitianOperator& a, const ContourQuadrature& q, int probe_count,
                              const ProbeRng& rng) {
  if (probe_count < 1) {
    throw InputError("probe count must be at least 1");
  }
  const FilteredProjector proj(a, q);
  EstimatorResult r;
  r.mu_samples.reserve(probe_count);
  r.nu_samples.reserve(probe_count);
  std::vector<cplx> probe_c(a.dim());
  for (int i = 0; i < probe_count; ++i) {
    const ProbeVector v = sample_probe(a.dim(), rng, static_cast<std::uint64_t>(i));
    const ProjectorApplication app = proj.apply(v.values);
    for (int j = 0; j < a.dim(); ++j) {
      probe_c[j] = v.values[j];
    }
    r.mu_samples.push_back(kernels::dot_conj(probe_c.data(), app.s.data(), app.s.size()));
    r.nu_samples.push_back(kernels::norm_sq(app.s.data(), app.s.size()));
  }
  r.sample_count = r.mu_samples.size();
  cplx mu_sum(0.0, 0.0);
  double nu_sum = 0.0;
  for (std::size_t i = 0; i < r.sample_count; ++i) {
    mu_sum += r.mu_samples[i];
    nu_sum += r.nu_samples[i];
  }
  const double count = static_cast<double>(r.sample_count);
  r.mu_estimate = mu_sum / count;
  r.nu_estimate = nu_sum / count;
  if (r.sample_count > 1) {
    double mu_var = 0.0;
    double nu_var = 0.0;
    for (std::size_t i = 0; i < r.sample_count; ++i) {
      mu_var += std::norm(r.mu_samples[i] - r.mu_estimate);
      const double d = r.nu_samples[i] - r.nu_estimate;
      nu_var += d * d;
    }
    r.mu_stderr = std::sqrt(mu_var / (count - 1.0)) / std::sqrt(count);
    r.nu_stderr = std::sqrt(nu_var / (count - 1.0)) / std::sqrt(count);
  }
  return r;
}

}  // namespace

EstimatorResult estimate_mu(const HermitianOperator& a, const ContourQuadrature& q, int probe_count,
                            const ProbeRng& rng) {
  return run_estimator(a, q, probe_count, rng);
}

EstimatorResult estimate_nu(const HermitianOperator& a, const ContourQuadrature& q, int probe_count,
                            const ProbeRng& rng) {
  return run_estimator(a, q, probe_count, rng);
}

cplx exact_mu(const EigenDecomposition& eigs, const ContourQuadrature& q) {
  cplx sum(0.0, 0.0);
  for (double lambda : eigs.eigenvalues) {
    sum += filter_value(q, lambda);
  }
  return sum;
}

double exact_nu(const EigenDecomposition& eigs, const ContourQuadrature& q) {
  double sum = 0.0;
  for (double lambda : eigs.eigenvalues) {
    sum += std::norm(filter_value(q, lambda));
  }
  return sum;
}

std::vector<cplx> filtered_projector_dense(const HermitianOperator& a, const ContourQuadrature& q) {
  const int n = a.dim();
  if (n > kDenseProjectorDimCap) {
    throw DimensionTooLarge("dense projector capped at dim " + std::to_string(kDenseProjectorDimCap));
  }
  std::vector<cplx> acc(static_cast<std::size_t>(n) * n, cplx(0.0));
  std::vector<cplx> unit(n, cplx(0.0));
  for (int k = 0; k < q.node_count; ++k) {
    const LuFactors lu = LuFactors::shifted(a, q.nodes[k]);
    for (int j = 0; j < n; ++j) {
      unit[j] = 1.0;
      const std::vector<cplx> col = lu.solve(unit);
      unit[j] = 0.0;
      for (int i = 0; i < n; ++i) {
        acc[static_cast<std::size_t>(i) * n + j] += q.weights[k] * col[i];
      }
    }
  }
  return acc;
}

cplx exact_trace_direct(const HermitianOperator& a, const ContourQuadrature& q) {
  const std::vector<cplx> p = filtered_projector_dense(a, q);
  const int n = a.dim();
  cplx trace(0.0, 0.0);
  for (int i = 0; i < n; ++i) {
    trace += p[static_cast<std::size_t>(i) * n + i];
  }
  return trace;
}

}  // namespace spectra
