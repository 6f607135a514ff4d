// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectra/linalg.hpp"

namespace spectra {

enum class DensityMode { exact_eig, classical_stochastic, quantum_sim };
enum class DensityEstimator { mu, nu };
enum class OutputFormat { json, csv };

/// One histogram job: split (a_total, b_total] into `bins` half-open bins
/// (e_i, e_{i+1}] and estimate the eigenvalue count per bin with the chosen
/// mode. An eigenvalue exactly on a shared edge counts toward the bin it
/// closes. Probes are shared across bins by stream index so histogram shapes
/// stay comparable at a fixed probe budget.
struct DensityRequest {
  std::string matrix_path;
  double a_total = 0.0;
  double b_total = 0.0;
  int bins = 8;
  int quad_qubits = 6;
  int probes = 64;
  DensityMode mode = DensityMode::classical_stochastic;
  DensityEstimator estimator = DensityEstimator::nu;
  std::uint64_t seed = 0;
  std::string out_path;
  OutputFormat format = OutputFormat::json;
  std::optional<double> pad_value;  // quantum mode only; defaults to b + 100*(b-a)
};

struct DensityHistogram {
  std::vector<double> edges;    // bins + 1, strictly increasing
  std::vector<double> counts;   // estimated eigenvalue count per bin
  std::vector<double> stderrs;  // 0 in exact mode
  struct Meta {
    std::string mode;
    std::string estimator;
    int quad_qubits = 0;
    long quad_nodes = 0;
    int probes = 0;
    std::uint64_t seed = 0;
    int dim = 0;
    int padded_dim = 0;
    int pad_count = 0;
    int bins = 0;
    std::string matrix_path;
    double wall_seconds = 0.0;  // reported on stdout, never written to files
  } meta;
};

struct PaddedOperator {
  HermitianOperator op;
  int pad_count = 0;
};

/// Append `pad_value` diagonal entries until the dimension is a power of two.
/// The pad value must lie strictly outside [a_total, b_total] widened by
/// 10*(b_total - a_total); padded probe components are fixed to zero by the
/// estimation paths, so padded eigenvalues contribute nothing.
/// Throws PadValueInsideInterval.
PaddedOperator pad_to_power_of_two(const HermitianOperator& a, double pad_value, double a_total,
                                   double b_total);

double default_pad_value(double a_total, double b_total);

/// Run the histogram job on an already-loaded operator.
DensityHistogram estimate_density(const DensityRequest& req, const HermitianOperator& a);

/// Load req.matrix_path and run.
DensityHistogram estimate_density(const DensityRequest& req);

/// Deterministic serializations (no volatile metadata).
std::string histogram_to_json(const DensityHistogram& h);
std::string histogram_to_csv(const DensityHistogram& h);

/// Write to req's output path in the given format. Throws IoError.
void write_histogram(const DensityHistogram& h, const std::string& path, OutputFormat format);

}  // namespace spectra
