// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance suite. Each criterion prints one [PASS]/[FAIL] line;
// the process exits nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"
#include "spectra/augmented.hpp"
#include "spectra/density.hpp"
#include "spectra/qsim.hpp"
#include "spectra/quadrature.hpp"
#include "spectra/trace.hpp"

namespace {

namespace fs = std::filesystem;
using spectra::cplx;
using test_helpers::diag_operator;
using test_helpers::random_hermitian;

int g_failures = 0;

void run_criterion(int number, const std::string& label, double time_limit_s,
                   const std::function<void()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt >= time_limit_s) {
      throw std::runtime_error("took " + std::to_string(dt) + " s, limit " +
                               std::to_string(time_limit_s) + " s");
    }
    std::printf("[PASS] criterion %2d: %s (%.2f s)\n", number, label.c_str(), dt);
  } catch (const std::exception& e) {
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[FAIL] criterion %2d: %s (%.2f s)\n       %s\n", number, label.c_str(), dt, e.what());
    ++g_failures;
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) {
    throw std::runtime_error(message);
  }
}

std::vector<double> random_real(int n, std::uint64_t seed) {
  auto g = test_helpers::rng(seed);
  std::vector<double> v(n);
  for (double& e : v) {
    e = test_helpers::uniform(g);
  }
  return v;
}

double norm_sq_of(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& e : v) {
    s += std::norm(e);
  }
  return s;
}

void criterion_filter_oracle() {
  for (int b : {2, 3, 4, 5}) {
    const double gamma = 0.3;
    const double rho = 0.8;
    const auto q = spectra::trapezoid_circle(gamma, rho, b);
    for (int i = 0; i <= 1000; ++i) {
      const double lambda = gamma - 4.0 * rho + 8.0 * rho * i / 1000.0;
      const double direct = spectra::filter_value(q, lambda).real();
      const double closed = spectra::filter_closed_form(q, lambda);
      require(std::abs(direct - closed) <= 1e-12,
              "filter mismatch at N=" + std::to_string(q.node_count) + ", lambda=" + std::to_string(lambda));
    }
    require(std::abs(spectra::filter_value(q, gamma) - cplx(1.0)) <= 1e-12, "filter(center) != 1");
    require(std::abs(spectra::filter_value(q, gamma + rho) - cplx(0.5)) <= 1e-12, "filter(b) != 1/2");
    require(std::abs(spectra::filter_value(q, gamma - rho) - cplx(0.5)) <= 1e-12, "filter(a) != 1/2");
  }
}

void criterion_trace_identity() {
  const auto q = spectra::trapezoid_circle(0.0, 1.0, 4);  // N = 16
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_hermitian(16, 9000 + trial);
    const auto d = spectra::eig_hermitian(a);
    const cplx via_eig = spectra::exact_mu(d, q);
    const cplx direct = spectra::exact_trace_direct(a, q);
    require(std::abs(direct - via_eig) <= 1e-10 * std::abs(via_eig),
            "trace mismatch on trial " + std::to_string(trial) + ": |" + std::to_string(std::abs(direct)) +
                " - " + std::to_string(std::abs(via_eig)) + "|");
  }
}

void criterion_estimator_statistics() {
  const int n = 32;
  const auto a = random_hermitian(n, 777);
  const auto q = spectra::trapezoid_circle(0.0, 1.0, 5);  // N = 32
  const auto d = spectra::eig_hermitian(a);
  const cplx mu = spectra::exact_mu(d, q);
  const double nu = spectra::exact_nu(d, q);
  const auto r =
      spectra::estimate_nu(a, q, 10000, spectra::ProbeRng{2718, spectra::ProbeDistribution::rademacher});
  require(r.sample_count == 10000, "sample count");
  require(std::abs(r.mu_estimate - mu) <= 4.0 * r.mu_stderr,
          "mu estimate " + std::to_string(r.mu_estimate.real()) + " vs oracle " + std::to_string(mu.real()) +
              " stderr " + std::to_string(r.mu_stderr));
  require(std::abs(r.nu_estimate - nu) <= 4.0 * r.nu_stderr,
          "nu estimate " + std::to_string(r.nu_estimate) + " vs oracle " + std::to_string(nu) + " stderr " +
              std::to_string(r.nu_stderr));

  // Zero-variance degenerate case: diagonal matrix, rademacher probes.
  auto g = test_helpers::rng(15);
  std::vector<double> eig(n);
  for (double& e : eig) {
    e = test_helpers::uniform(g, -2.0, 2.0);
  }
  const auto diag = diag_operator(eig);
  const cplx diag_mu = spectra::exact_mu(spectra::eig_hermitian(diag), q);
  const auto rd =
      spectra::estimate_mu(diag, q, 32, spectra::ProbeRng{12, spectra::ProbeDistribution::rademacher});
  for (const cplx& sample : rd.mu_samples) {
    require(std::abs(sample - diag_mu) <= 1e-12 * std::max(1.0, std::abs(diag_mu)),
            "diagonal sample deviates: " + std::to_string(std::abs(sample - diag_mu)));
  }
}

void criterion_augmented_correctness() {
  for (int n : {2, 4, 8}) {
    for (int b : {2, 3, 4}) {
      const auto a = random_hermitian(n, 40 + 10 * n + b);
      const auto q = spectra::trapezoid_circle(0.1, 1.2, b);
      const std::vector<double> v = random_real(n, 60 + n + b);
      const auto sys = spectra::AugmentedSystem::build(a, q, v);
      require(sys.dim() == static_cast<long>(n) * q.node_count, "dim(C) != n*N");
      const auto c = sys.dense_matrix();
      const long d = sys.dim();
      for (long i = 0; i < d; ++i) {
        for (long j = 0; j < d; ++j) {
          require(std::abs(c[i * d + j] - std::conj(c[j * d + i])) <= 1e-12, "C not hermitian");
        }
      }
      const auto layout = spectra::solve_augmented(sys);
      for (int p = 0; p < q.node_count; ++p) {
        const int k = layout.block_quadrature_index(p);
        const auto direct = spectra::solve_shifted(a, q.nodes[k], std::span<const double>(v));
        const auto blk = layout.block(p);
        double err = 0.0;
        double scale = 0.0;
        for (int i = 0; i < n; ++i) {
          err += std::norm(blk[i] - direct[i]);
          scale += std::norm(direct[i]);
        }
        require(std::sqrt(err) <= 1e-10 * std::sqrt(scale), "solution block deviates from direct solve");
      }
    }
  }
}

void criterion_permutation_cnots() {
  for (int b = 1; b <= 5; ++b) {
    const int n_nodes = 1 << b;
    const auto gates = spectra::permutation_as_cnots(b);
    require(static_cast<int>(gates.size()) == b - 1, "gate count != b-1");
    for (int k = 0; k < n_nodes; ++k) {
      // Push a basis state through the gate list.
      std::vector<cplx> basis(n_nodes, cplx(0.0));
      basis[k] = 1.0;
      const auto state =
          spectra::apply_counting_gates(spectra::prepare_state(basis, spectra::RegisterSplit{b, 0}), gates);
      const int image = spectra::permutation_pi(n_nodes, k);
      require(state.amplitudes()[image] == cplx(1.0), "gate permutation differs from index map");
      require(spectra::permutation_pi(n_nodes, image) == k, "permutation is not an involution");
    }
  }
}

void criterion_qft() {
  for (int b = 1; b <= 5; ++b) {
    const auto dense = spectra::qft_dense(b);
    const auto from_gates = spectra::circuit_unitary(spectra::qft_gates(b), b);
    const std::size_t n = std::size_t{1} << b;
    for (std::size_t i = 0; i < n * n; ++i) {
      require(std::abs(from_gates[i] - dense[i]) <= 1e-12, "gate product deviates from dense transform");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cplx acc(0.0);
        for (std::size_t k = 0; k < n; ++k) {
          acc += dense[i * n + k] * std::conj(dense[j * n + k]);
        }
        require(std::abs(acc - (i == j ? cplx(1.0) : cplx(0.0))) <= 1e-12, "transform not unitary");
      }
    }
  }
}

void criterion_pipeline_identity() {
  const int n = 8;
  const auto q = spectra::trapezoid_circle(0.0, 1.0, 4);  // N = 16
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_hermitian(n, 5000 + trial);
    const std::vector<double> v = random_real(n, 6000 + trial);

    spectra::ProbeVector probe;
    probe.values = v;
    const auto app = spectra::apply_filtered_projector(a, q, probe);
    const double classical = norm_sq_of(app.s);

    const auto layout = spectra::solve_augmented(spectra::AugmentedSystem::build(a, q, v));
    const double y_norm_sq = norm_sq_of(layout.y);
    spectra::RegisterSplit regs{q.node_qubits, 3};
    auto state = spectra::prepare_state(layout.y, regs);
    state = spectra::apply_block_permutation(state);
    state = spectra::apply_qft_counting(state);
    const double p = spectra::counting_probability(state, 1);
    const double recovered = spectra::recover_s_norm_sq(p, y_norm_sq, q.rho, q.node_count);
    require(std::abs(recovered - classical) <= 1e-10 * classical,
            "pipeline norm mismatch on trial " + std::to_string(trial));
  }
}

void criterion_filter_accuracy_nu() {
  const double gamma = 0.2;
  const double rho = 0.7;
  const auto q = spectra::trapezoid_circle(gamma, rho, 5);  // N = 32
  const auto a = diag_operator({gamma - 0.5 * rho, gamma + 0.5 * rho, gamma - 2.0 * rho, gamma + 2.0 * rho,
                                gamma - 3.0 * rho, gamma + 3.0 * rho});
  const double nu = spectra::exact_nu(spectra::eig_hermitian(a), q);
  require(std::abs(nu - 2.0) <= 1e-5, "nu deviates from 2 by " + std::to_string(std::abs(nu - 2.0)));
}

void criterion_idealized_solver() {
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_hermitian(2, 300 + trial);
    const auto q = spectra::trapezoid_circle(0.0, 1.0, 2);  // N = 4
    const std::vector<double> v = random_real(2, 400 + trial);
    const auto sys = spectra::AugmentedSystem::build(a, q, v);
    const auto layout = spectra::solve_augmented(sys);
    const double y_norm_sq = norm_sq_of(layout.y);
    const double rhs_norm_sq = norm_sq_of(sys.rhs());
    const double c = 0.01;
    const auto outcome = spectra::idealized_hhl(sys, c);
    const double recovered = outcome.ancilla_zero_prob * rhs_norm_sq / (c * c);
    require(std::abs(recovered - y_norm_sq) <= 1e-12 * y_norm_sq, "solution norm recovery off");
  }
  const std::vector<cplx> e0 = {cplx(1.0), cplx(0.0)};
  const std::vector<cplx> e1 = {cplx(0.0), cplx(1.0)};
  const auto u = spectra::prepare_state(e0, spectra::RegisterSplit{0, 1});
  const auto w = spectra::prepare_state(e1, spectra::RegisterSplit{0, 1});
  require(spectra::swap_test_accept_prob(u, u) == 1.0, "swap test on identical states != 1");
  require(spectra::swap_test_accept_prob(u, w) == 0.5, "swap test on orthogonal states != 1/2");
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion_cli() {
  const fs::path dir = fs::temp_directory_path() / "spectra_acceptance";
  fs::create_directories(dir);
  const fs::path mtx = dir / "diag12.mtx";
  const std::vector<double> eig = {0.05, 0.1, 0.15, 0.3, 0.35, 0.45, 0.55, 0.6, 0.7, 0.8, 0.85, 0.95};
  {
    std::ofstream out(mtx);
    out << "%%MatrixMarket matrix coordinate real symmetric\n";
    out << eig.size() << " " << eig.size() << " " << eig.size() << "\n";
    for (std::size_t i = 0; i < eig.size(); ++i) {
      out << (i + 1) << " " << (i + 1) << " " << eig[i] << "\n";
    }
  }
  const std::vector<double> truth = {3.0, 3.0, 3.0, 3.0};

  const auto run = [&](const std::string& args) {
    const std::string cmd = std::string(SPECTRA_COUNT_BIN) + " " + args + " > /dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };

  const fs::path exact_out = dir / "exact.json";
  require(run("--matrix " + mtx.string() + " --interval 0,1 --bins 4 --mode exact-eig --out " +
              exact_out.string()) == 0,
          "exact-eig run failed");
  const auto exact = nlohmann::json::parse(slurp(exact_out));
  const auto exact_counts = exact["counts"].get<std::vector<double>>();
  require(exact_counts == truth, "exact-eig counts differ from the known spectrum");

  const std::string qargs = "--matrix " + mtx.string() +
                            " --interval 0,1 --bins 4 --mode quantum-sim --estimator nu --quad-qubits 5 "
                            "--probes 64 --seed 424242";
  const fs::path q1 = dir / "quantum1.json";
  const fs::path q2 = dir / "quantum2.json";
  require(run(qargs + " --out " + q1.string()) == 0, "quantum-sim run failed");
  require(run(qargs + " --out " + q2.string()) == 0, "quantum-sim rerun failed");
  const std::string blob1 = slurp(q1);
  require(!blob1.empty() && blob1 == slurp(q2), "same seed did not give byte-identical output");

  const auto quantum = nlohmann::json::parse(blob1);
  const auto counts = quantum["counts"].get<std::vector<double>>();
  const auto stderrs = quantum["stderr"].get<std::vector<double>>();
  require(counts.size() == 4, "bin count mismatch");
  for (std::size_t b = 0; b < 4; ++b) {
    const double tol = std::max(4.0 * stderrs[b], 0.1);
    require(std::abs(counts[b] - truth[b]) <= tol,
            "bin " + std::to_string(b) + " estimate " + std::to_string(counts[b]) + " outside " +
                std::to_string(tol) + " of " + std::to_string(truth[b]));
  }
}

}  // namespace

int main() {
  run_criterion(1, "quadrature filter matches its closed form (N in {4,8,16,32})", 1.0,
                criterion_filter_oracle);
  run_criterion(2, "materialized projector trace equals the eigenvalue sum (20 x n=16, N=16)", 5.0,
                criterion_trace_identity);
  run_criterion(3, "stochastic estimates hit the oracles within 4 standard errors (n=32, N=32, 1e4 probes)",
                60.0, criterion_estimator_statistics);
  run_criterion(4, "augmented system is hermitian, half-size, and block-consistent", 10.0,
                criterion_augmented_correctness);
  run_criterion(5, "CNOT cascade realizes the block permutation (b in 1..5)", 1.0,
                criterion_permutation_cnots);
  run_criterion(6, "transform gate list equals the dense unitary (b in 1..5)", 1.0, criterion_qft);
  run_criterion(7, "readout probability inverts to the classical squared norm (50 x n=8, N=16)", 30.0,
                criterion_pipeline_identity);
  run_criterion(8, "squared filter counts two inside eigenvalues to 1e-5 (N=32)", 1.0,
                criterion_filter_accuracy_nu);
  run_criterion(9, "idealized solver norm recovery and swap-test anchors", 1.0, criterion_idealized_solver);
  run_criterion(10, "CLI end to end: exact counts, quantum estimates, deterministic files", 60.0,
                criterion_cli);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
