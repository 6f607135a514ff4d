// SPDX-License-Identifier: Apache-2.0

#include "spectra/density.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "spectra/augmented.hpp"
#include "spectra/errors.hpp"
#include "spectra/kernels.hpp"
#include "spectra/matrix_market.hpp"
#include "spectra/qsim.hpp"
#include "spectra/quadrature.hpp"
#include "spectra/trace.hpp"

namespace spectra {

namespace {

const char* mode_name(DensityMode m) {
  switch (m) {
    case DensityMode::exact_eig:
      return "exact-eig";
    case DensityMode::classical_stochastic:
      return "classical-stochastic";
    case DensityMode::quantum_sim:
      return "quantum-sim";
  }
  return "?";
}

const char* estimator_name(DensityEstimator e) {
  return e == DensityEstimator::mu ? "mu" : "nu";
}

void validate(const DensityRequest& req) {
  if (!(req.a_total < req.b_total)) {
    throw EmptyInterval("interval is empty");
  }
  if (req.bins < 1) {
    throw InputError("bin count must be at least 1");
  }
  if (req.quad_qubits < 1 || req.quad_qubits > 20) {
    throw NodeCountOutOfRange("quadrature exponent must be in [1, 20]");
  }
  if (req.mode != DensityMode::exact_eig && req.probes < 1) {
    throw InputError("probe count must be at least 1");
  }
  if (req.mode == DensityMode::quantum_sim && req.estimator == DensityEstimator::mu) {
    throw InputError("estimator 'mu' is not available in quantum-sim mode; the readout yields ||s||^2");
  }
}

std::vector<double> make_edges(double a, double b, int bins) {
  std::vector<double> edges(bins + 1);
  for (int i = 0; i <= bins; ++i) {
    edges[i] = a + (b - a) * static_cast<double>(i) / bins;
  }
  edges[0] = a;
  edges[bins] = b;
  return edges;
}

// Half-open bins (e_i, e_{i+1}]: an eigenvalue on a shared edge belongs to the
// bin it closes, so counts tile the interval without double counting, and the
// left endpoint stays outside like the open-interval indicator.
bool in_bin(double lambda, double lo, double hi) { return lambda > lo && lambda <= hi; }

struct SampleStats {
  double mean = 0.0;
  double stderr_ = 0.0;
};

SampleStats stats(const std::vector<double>& samples) {
  SampleStats st;
  const double count = static_cast<double>(samples.size());
  for (double s : samples) {
    st.mean += s;
  }
  st.mean /= count;
  if (samples.size() > 1) {
    double var = 0.0;
    for (double s : samples) {
      const double d = s - st.mean;
      var += d * d;
    }
    st.stderr_ = std::sqrt(var / (count - 1.0)) / std::sqrt(count);
  }
  return st;
}

}  // namespace

double default_pad_value(double a_total, double b_total) {
  return b_total + 100.0 * (b_total - a_total);
}

PaddedOperator pad_to_power_of_two(const HermitianOperator& a, double pad_value, double a_total,
                                   double b_total) {
  const double width = b_total - a_total;
  if (pad_value >= a_total - 10.0 * width && pad_value <= b_total + 10.0 * width) {
    throw PadValueInsideInterval("pad value " + std::to_string(pad_value) +
                                 " lies inside the widened interval");
  }
  const int n = a.dim();
  int target = 1;
  while (target < n) {
    target <<= 1;
  }
  if (target == n) {
    return {a, 0};
  }
  std::vector<cplx> entries(static_cast<std::size_t>(target) * target, cplx(0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      entries[static_cast<std::size_t>(i) * target + j] = a(i, j);
    }
  }
  for (int i = n; i < target; ++i) {
    entries[static_cast<std::size_t>(i) * target + i] = pad_value;
  }
  return {HermitianOperator::from_entries(std::move(entries), target), target - n};
}

DensityHistogram estimate_density(const DensityRequest& req, const HermitianOperator& a) {
  validate(req);
  const auto t0 = std::chrono::steady_clock::now();

  DensityHistogram h;
  h.edges = make_edges(req.a_total, req.b_total, req.bins);
  h.counts.assign(req.bins, 0.0);
  h.stderrs.assign(req.bins, 0.0);
  h.meta.mode = mode_name(req.mode);
  h.meta.estimator = req.mode == DensityMode::exact_eig ? "" : estimator_name(req.estimator);
  h.meta.quad_qubits = req.mode == DensityMode::exact_eig ? 0 : req.quad_qubits;
  h.meta.quad_nodes = req.mode == DensityMode::exact_eig ? 0 : (1L << req.quad_qubits);
  h.meta.probes = req.mode == DensityMode::exact_eig ? 0 : req.probes;
  h.meta.seed = req.seed;
  h.meta.dim = a.dim();
  h.meta.padded_dim = a.dim();
  h.meta.pad_count = 0;
  h.meta.bins = req.bins;
  h.meta.matrix_path = req.matrix_path;

  if (req.mode == DensityMode::exact_eig) {
    const EigenDecomposition d = eig_hermitian(a);
    for (int b = 0; b < req.bins; ++b) {
      int count = 0;
      for (double lambda : d.eigenvalues) {
        if (in_bin(lambda, h.edges[b], h.edges[b + 1])) {
          ++count;
        }
      }
      h.counts[b] = static_cast<double>(count);
    }
  } else {
    const HermitianOperator* op = &a;
    PaddedOperator padded{a, 0};
    int probe_dim = a.dim();
    if (req.mode == DensityMode::quantum_sim) {
      padded = pad_to_power_of_two(a, req.pad_value.value_or(default_pad_value(req.a_total, req.b_total)),
                                   req.a_total, req.b_total);
      op = &padded.op;
      h.meta.padded_dim = padded.op.dim();
      h.meta.pad_count = padded.pad_count;
    }
    const ProbeRng rng{req.seed, ProbeDistribution::rademacher};

    // One probe set, shared across bins by stream index.
    std::vector<std::vector<double>> probes(req.probes);
    for (int i = 0; i < req.probes; ++i) {
      ProbeVector v = sample_probe(probe_dim, rng, static_cast<std::uint64_t>(i));
      probes[i] = std::move(v.values);
      probes[i].resize(op->dim(), 0.0);  // padded components carry no probe weight
    }

    for (int b = 0; b < req.bins; ++b) {
      const auto [gamma, rho] = interval_to_circle(h.edges[b], h.edges[b + 1]);
      const ContourQuadrature quad = trapezoid_circle(gamma, rho, req.quad_qubits);
      std::vector<double> samples(req.probes);
      if (req.mode == DensityMode::classical_stochastic) {
        const FilteredProjector proj(*op, quad);
        std::vector<cplx> probe_c(op->dim());
        for (int i = 0; i < req.probes; ++i) {
          const ProjectorApplication app = proj.apply(probes[i]);
          if (req.estimator == DensityEstimator::nu) {
            samples[i] = kernels::norm_sq(app.s.data(), app.s.size());
          } else {
            for (int j = 0; j < op->dim(); ++j) {
              probe_c[j] = probes[i][j];
            }
            samples[i] = kernels::dot_conj(probe_c.data(), app.s.data(), app.s.size()).real();
          }
        }
      } else {
        const AugmentedSolver solver(*op, quad);
        for (int i = 0; i < req.probes; ++i) {
          const SolutionLayout layout = solver.solve(probes[i]);
          const double y_norm_sq = kernels::norm_sq(layout.y.data(), layout.y.size());
          RegisterSplit regs;
          regs.counting_qubits = quad.node_qubits;
          while ((1 << regs.system_qubits) < op->dim()) {
            ++regs.system_qubits;
          }
          StateVector state = prepare_state(layout.y, regs);
          state = apply_block_permutation(state);
          state = apply_qft_counting(state);
          const double p = counting_probability(state, 1);
          samples[i] = recover_s_norm_sq(p, y_norm_sq, quad.rho, quad.node_count);
        }
      }
      const SampleStats st = stats(samples);
      h.counts[b] = st.mean;
      h.stderrs[b] = st.stderr_;
    }
  }

  h.meta.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return h;
}

DensityHistogram estimate_density(const DensityRequest& req) {
  validate(req);
  const HermitianOperator a = load_matrix_market(req.matrix_path);
  return estimate_density(req, a);
}

std::string histogram_to_json(const DensityHistogram& h) {
  nlohmann::ordered_json j;
  j["edges"] = h.edges;
  j["counts"] = h.counts;
  j["stderr"] = h.stderrs;
  nlohmann::ordered_json meta;
  meta["mode"] = h.meta.mode;
  meta["estimator"] = h.meta.estimator;
  meta["quad_qubits"] = h.meta.quad_qubits;
  meta["quad_nodes"] = h.meta.quad_nodes;
  meta["probes"] = h.meta.probes;
  meta["seed"] = h.meta.seed;
  meta["dim"] = h.meta.dim;
  meta["padded_dim"] = h.meta.padded_dim;
  meta["pad_count"] = h.meta.pad_count;
  meta["bins"] = h.meta.bins;
  meta["matrix"] = h.meta.matrix_path;
  j["meta"] = std::move(meta);
  return j.dump(2) + "\n";
}

std::string histogram_to_csv(const DensityHistogram& h) {
  std::string out = "edge_lo,edge_hi,count,stderr\n";
  char buf[160];
  for (std::size_t b = 0; b + 1 < h.edges.size(); ++b) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", h.edges[b], h.edges[b + 1], h.counts[b],
                  h.stderrs[b]);
    out += buf;
  }
  return out;
}

void write_histogram(const DensityHistogram& h, const std::string& path, OutputFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  out << (format == OutputFormat::json ? histogram_to_json(h) : histogram_to_csv(h));
  if (!out.good()) {
    throw IoError("write to '" + path + "' failed");
  }
}

}  // namespace spectra
