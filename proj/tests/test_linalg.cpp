// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <complex>
#include <vector>

#include "helpers.hpp"
#include "spectra/errors.hpp"
#include "spectra/linalg.hpp"

using spectra::cplx;
using spectra::HermitianOperator;
using namespace std::complex_literals;

namespace {

std::vector<cplx> residual(const HermitianOperator& a, cplx z, const std::vector<cplx>& x,
                           const std::vector<cplx>& v) {
  const int n = a.dim();
  std::vector<cplx> r(n);
  for (int i = 0; i < n; ++i) {
    cplx acc = z * x[i] - v[i];
    for (int j = 0; j < n; ++j) {
      acc -= a(i, j) * x[j];
    }
    r[i] = acc;
  }
  return r;
}

}  // namespace

TEST_CASE("hermitian construction accepts valid matrices") {
  const auto one = spectra::build_hermitian({{cplx(2.0, 0.0)}});
  CHECK(one.dim() == 1);
  CHECK(one(0, 0) == cplx(2.0, 0.0));

  const auto pauli_y_like = spectra::build_hermitian({{0.0 + 0.0i, 0.0 + 1.0i}, {0.0 - 1.0i, 0.0 + 0.0i}});
  CHECK(pauli_y_like.dim() == 2);
  CHECK(pauli_y_like(0, 1) == cplx(0.0, 1.0));
}

TEST_CASE("hermitian construction rejects bad input") {
  CHECK_THROWS_AS(spectra::build_hermitian({{0.0 + 0.0i, 1.0 + 0.0i}, {0.0 + 0.0i, 0.0 + 0.0i}}),
                  spectra::NotHermitian);
  CHECK_THROWS_AS(spectra::build_hermitian({{1.0 + 0.0i, 2.0 + 0.0i}}), spectra::NotSquare);
  CHECK_THROWS_AS(spectra::build_hermitian({}), spectra::NotSquare);
}

TEST_CASE("small asymmetry is symmetrized away") {
  // Round-trip noise below the 1e-8 gate must yield exactly Hermitian storage.
  auto op = spectra::build_hermitian({{1.0 + 0.0i, 0.5 + (1e-9) * 1.0i}, {0.5 + 0.0i, 2.0 + 0.0i}});
  CHECK(op(0, 1) == std::conj(op(1, 0)));
  CHECK(op(0, 0).imag() == 0.0);
}

TEST_CASE("shifted solve on a diagonal matrix matches componentwise division") {
  const auto a = test_helpers::diag_operator({1.0, 3.0});
  const cplx z = 2.0 + 1.0i;
  const std::vector<cplx> v = {1.0 + 0.0i, 1.0 + 0.0i};
  const auto x = spectra::solve_shifted(a, z, v);
  CHECK(std::abs(x[0] - 1.0 / (1.0 + 1.0i)) <= 1e-14);
  CHECK(std::abs(x[1] - 1.0 / (-1.0 + 1.0i)) <= 1e-14);
}

TEST_CASE("zero matrix with unit shift returns the right-hand side") {
  const auto a = test_helpers::diag_operator({0.0, 0.0, 0.0});
  const std::vector<cplx> v = {1.0 + 2.0i, -0.5 + 0.0i, 0.25 - 1.0i};
  const auto x = spectra::solve_shifted(a, cplx(1.0), v);
  CHECK(test_helpers::max_abs_diff(x, v) == 0.0);
}

TEST_CASE("exactly singular shift is reported") {
  const auto a = test_helpers::diag_operator({2.0});
  const std::vector<cplx> v = {1.0 + 0.0i};
  CHECK_THROWS_AS(spectra::solve_shifted(a, cplx(2.0), v), spectra::SingularShift);
}

TEST_CASE("shifted solve residuals stay below 1e-10 of the rhs") {
  for (int n : {2, 8, 32}) {
    const auto a = test_helpers::random_hermitian(n, 1000 + n);
    auto g = test_helpers::rng(77 + n);
    std::vector<cplx> v(n);
    for (auto& e : v) {
      e = cplx(test_helpers::uniform(g), test_helpers::uniform(g));
    }
    const cplx z(0.3, 0.45);
    const auto x = spectra::solve_shifted(a, z, v);
    const auto r = residual(a, z, x, v);
    CHECK(test_helpers::norm2(r) <= 1e-10 * test_helpers::norm2(v));
  }
}

TEST_CASE("conjugate shift gives the conjugate solution for real symmetric input") {
  const auto a = test_helpers::random_real_symmetric(8, 4242);
  std::vector<cplx> v(8);
  auto g = test_helpers::rng(11);
  for (auto& e : v) {
    e = test_helpers::uniform(g);  // real probe
  }
  const cplx z(0.1, 0.8);
  const auto x = spectra::solve_shifted(a, z, v);
  const auto xc = spectra::solve_shifted(a, std::conj(z), v);
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(xc[i] - std::conj(x[i])) <= 1e-10);
  }
}

TEST_CASE("adjoint solve equals solving at the conjugate shift") {
  // (z I - A)^H = conj(z) I - A for Hermitian A; both routes must agree.
  const auto a = test_helpers::random_hermitian(10, 90);
  std::vector<cplx> v(10);
  auto g = test_helpers::rng(12);
  for (auto& e : v) {
    e = cplx(test_helpers::uniform(g), test_helpers::uniform(g));
  }
  const cplx z(-0.2, 0.6);
  const auto lu = spectra::LuFactors::shifted(a, z);
  const auto via_adjoint = lu.solve_adjoint(v);
  const auto direct = spectra::solve_shifted(a, std::conj(z), v);
  CHECK(test_helpers::max_abs_diff(via_adjoint, direct) <= 1e-12);
}

TEST_CASE("eigendecomposition of a diagonal matrix is the sorted diagonal") {
  const auto a = test_helpers::diag_operator({3.0, 1.0});
  const auto d = spectra::eig_hermitian(a);
  CHECK(d.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
  // Columns are unit coordinate vectors up to phase.
  CHECK(std::abs(std::abs(d.vector_entry(1, 0)) - 1.0) <= 1e-12);
  CHECK(std::abs(std::abs(d.vector_entry(0, 1)) - 1.0) <= 1e-12);
  CHECK(std::abs(d.vector_entry(0, 0)) <= 1e-12);
  CHECK(std::abs(d.vector_entry(1, 1)) <= 1e-12);

  const auto diag = test_helpers::diag_operator({0.25, -1.5, 4.0, 0.125});
  const auto dd = spectra::eig_hermitian(diag);
  const std::vector<double> expect = {-1.5, 0.125, 0.25, 4.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(dd.eigenvalues[i] - expect[i]) <= 1e-12);
  }
}

TEST_CASE("symmetric off-diagonal pair has eigenvalues -1 and 1") {
  const auto a = spectra::build_hermitian({{0.0 + 0.0i, 1.0 + 0.0i}, {1.0 + 0.0i, 0.0 + 0.0i}});
  const auto d = spectra::eig_hermitian(a);
  CHECK(d.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(d.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random hermitian eigendecomposition reconstructs and is unitary") {
  const int n = 8;
  const auto a = test_helpers::random_hermitian(n, 31337);
  const auto d = spectra::eig_hermitian(a);
  for (int i = 1; i < n; ++i) {
    CHECK(d.eigenvalues[i - 1] <= d.eigenvalues[i]);
  }
  double recon_err = 0.0;
  double unitary_err = 0.0;
  double frob = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cplx recon(0.0);
      cplx gram(0.0);
      for (int k = 0; k < n; ++k) {
        recon += d.vector_entry(i, k) * d.eigenvalues[k] * std::conj(d.vector_entry(j, k));
        gram += std::conj(d.vector_entry(k, i)) * d.vector_entry(k, j);
      }
      recon_err += std::norm(recon - a(i, j));
      unitary_err += std::norm(gram - (i == j ? cplx(1.0) : cplx(0.0)));
      frob += std::norm(a(i, j));
    }
  }
  CHECK(std::sqrt(recon_err) <= 1e-10 * std::sqrt(frob));
  CHECK(std::sqrt(unitary_err) <= 1e-10);
}

TEST_CASE("eigendecomposition respects the dimension cap") {
  const auto a = test_helpers::random_hermitian(4, 5);
  CHECK_THROWS_AS(spectra::eig_hermitian(a, 3), spectra::DimensionTooLarge);
}
