#include "holosem/convolution.hpp"

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "holosem/errors.hpp"

namespace holosem {

namespace {

void require_same_dim(const HyperVector& a, const HyperVector& b, const char* where) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(where) + ": dimension mismatch");
  }
  if (a.dim() == 0) {
    throw DimensionError(std::string(where) + ": dim must be >= 1");
  }
}

// Cached FFTW plans per dimension. Plans are created once with
// FFTW_ESTIMATE | FFTW_UNALIGNED (deterministic plan choice, arbitrary
// buffer alignment) and executed through the new-array interface, which is
// re-entrant. Plan creation itself is serialized; fftw_execute_dft_r2c on a
// settled plan is thread-safe.
struct FftPlans {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;
};

const FftPlans& plans_for(std::size_t dim) {
  static std::mutex mutex;
  static std::map<std::size_t, FftPlans> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(dim);
  if (it != cache.end()) return it->second;

  const std::size_t spectrum = dim / 2 + 1;
  std::vector<double> real_buf(dim, 0.0);
  std::vector<std::complex<double>> cplx_buf(spectrum);
  FftPlans plans;
  plans.forward = fftw_plan_dft_r2c_1d(
      static_cast<int>(dim), real_buf.data(),
      reinterpret_cast<fftw_complex*>(cplx_buf.data()),
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans.inverse = fftw_plan_dft_c2r_1d(
      static_cast<int>(dim), reinterpret_cast<fftw_complex*>(cplx_buf.data()),
      real_buf.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (plans.forward == nullptr || plans.inverse == nullptr) {
    throw NumericCheckError("circ_conv_fft: FFTW plan creation failed");
  }
  return cache.emplace(dim, plans).first->second;
}

}  // namespace

HyperVector circ_conv_naive(const HyperVector& a, const HyperVector& b) {
  require_same_dim(a, b, "circ_conv_naive");
  const std::size_t n = a.dim();
  HyperVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      sum += a[j] * b[(k + n - j) % n];
    }
    out[k] = sum;
  }
  return out;
}

HyperVector circ_conv_fft(const HyperVector& a, const HyperVector& b) {
  require_same_dim(a, b, "circ_conv_fft");
  const std::size_t n = a.dim();
  if (n == 1) return HyperVector(std::vector<double>{a[0] * b[0]});

  const FftPlans& plans = plans_for(n);
  const std::size_t spectrum = n / 2 + 1;

  std::vector<double> in_a(a.coords);
  std::vector<double> in_b(b.coords);
  std::vector<std::complex<double>> fa(spectrum);
  std::vector<std::complex<double>> fb(spectrum);
  fftw_execute_dft_r2c(plans.forward, in_a.data(),
                       reinterpret_cast<fftw_complex*>(fa.data()));
  fftw_execute_dft_r2c(plans.forward, in_b.data(),
                       reinterpret_cast<fftw_complex*>(fb.data()));
  for (std::size_t i = 0; i < spectrum; ++i) fa[i] *= fb[i];

  HyperVector out(n);
  fftw_execute_dft_c2r(plans.inverse, reinterpret_cast<fftw_complex*>(fa.data()),
                       out.coords.data());
  const double scale = 1.0 / static_cast<double>(n);
  for (double& x : out.coords) x *= scale;
  return out;
}

HyperVector circ_conv(const HyperVector& a, const HyperVector& b) {
  // Crossover picked generously; exact value only affects speed.
  constexpr std::size_t kFftThreshold = 64;
  return a.dim() < kFftThreshold ? circ_conv_naive(a, b) : circ_conv_fft(a, b);
}

HyperVector involution(const HyperVector& a) {
  const std::size_t n = a.dim();
  HyperVector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[(n - i) % n];
  return out;
}

HyperVector circ_corr(const HyperVector& trace, const HyperVector& cue) {
  require_same_dim(trace, cue, "circ_corr");
  return circ_conv(trace, involution(cue));
}

}  // namespace holosem
