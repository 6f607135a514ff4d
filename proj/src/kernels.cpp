// SPDX-License-Identifier: Apache-2.0

#include "spectra/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"
#include "spectra/errors.hpp"

namespace spectra::kernels {

namespace {

struct KernelTable {
  double (*norm_sq)(const cplx*, std::size_t);
  cplx (*dot)(const cplx*, const cplx*, std::size_t);
  cplx (*dot_conj)(const cplx*, const cplx*, std::size_t);
  void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
  void (*scale)(cplx, cplx*, std::size_t);
  void (*hadamard_pair)(cplx*, cplx*, std::size_t);
};

constexpr KernelTable kScalarTable = {
    scalar_impl::norm_sq, scalar_impl::dot,   scalar_impl::dot_conj,
    scalar_impl::axpy,    scalar_impl::scale, scalar_impl::hadamard_pair,
};

#if SPECTRA_HAVE_AVX2
constexpr KernelTable kAvx2Table = {
    avx2_impl::norm_sq, avx2_impl::dot,   avx2_impl::dot_conj,
    avx2_impl::axpy,    avx2_impl::scale, avx2_impl::hadamard_pair,
};
#endif

bool cpu_has_avx2() {
#if SPECTRA_HAVE_AVX2
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* table_for(Backend b) {
#if SPECTRA_HAVE_AVX2
  if (b == Backend::avx2) {
    return &kAvx2Table;
  }
#endif
  (void)b;
  return &kScalarTable;
}

Backend resolve_initial() {
  Backend pick = cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
  if (const char* env = std::getenv("SPECTRA_KERNELS")) {
    const std::string v(env);
    if (v == "scalar") {
      pick = Backend::scalar;
    } else if (v == "avx2" && cpu_has_avx2()) {
      pick = Backend::avx2;
    }
  }
  return pick;
}

std::atomic<int> g_backend{-1};  // -1 until first use

int backend_index() {
  int idx = g_backend.load(std::memory_order_acquire);
  if (idx < 0) {
    idx = static_cast<int>(resolve_initial());
    g_backend.store(idx, std::memory_order_release);
  }
  return idx;
}

const KernelTable& table() { return *table_for(static_cast<Backend>(backend_index())); }

}  // namespace

Backend active_backend() { return static_cast<Backend>(backend_index()); }

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
      return cpu_has_avx2();
  }
  return false;
}

void select_backend(Backend b) {
  if (!backend_available(b)) {
    throw BackendUnavailable("kernel backend '" + std::string(backend_name(b)) +
                             "' is not available on this host");
  }
  g_backend.store(static_cast<int>(b), std::memory_order_release);
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

double norm_sq(const cplx* x, std::size_t n) { return table().norm_sq(x, n); }
cplx dot(const cplx* x, const cplx* y, std::size_t n) { return table().dot(x, y, n); }
cplx dot_conj(const cplx* x, const cplx* y, std::size_t n) { return table().dot_conj(x, y, n); }
void axpy(cplx a, const cplx* x, cplx* y, std::size_t n) { table().axpy(a, x, y, n); }
void scale(cplx a, cplx* x, std::size_t n) { table().scale(a, x, n); }
void hadamard_pair(cplx* a, cplx* b, std::size_t n) { table().hadamard_pair(a, b, n); }

}  // namespace spectra::kernels
