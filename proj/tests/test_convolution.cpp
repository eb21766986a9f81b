#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "holosem/convolution.hpp"
#include "holosem/errors.hpp"
#include "holosem/hypervector.hpp"

using namespace holosem;

namespace {

double max_abs_diff(const HyperVector& a, const HyperVector& b) {
  REQUIRE(a.dim() == b.dim());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    worst = std::max(worst, std::fabs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("circ_conv_naive: impulse is the identity") {
  Rng rng(2);
  const HyperVector b = random_unit(16, rng);
  const HyperVector out = circ_conv_naive(unit_impulse(16), b);
  CHECK(max_abs_diff(out, b) < 1e-15);
}

TEST_CASE("circ_conv_naive: commutative") {
  Rng rng(3);
  const HyperVector a = random_unit(33, rng);
  const HyperVector b = random_unit(33, rng);
  CHECK(max_abs_diff(circ_conv_naive(a, b), circ_conv_naive(b, a)) < 1e-12);
}

TEST_CASE("circ_conv_naive: shifted impulse rotates") {
  // a = impulse at 1, so (a * b)_k = b_{k-1 mod 4}.
  const HyperVector a = unit_impulse(4, 1);
  const HyperVector b({10.0, 20.0, 30.0, 40.0});
  const HyperVector out = circ_conv_naive(a, b);
  CHECK(out[0] == 40.0);
  CHECK(out[1] == 10.0);
  CHECK(out[2] == 20.0);
  CHECK(out[3] == 30.0);
}

TEST_CASE("circ_conv_naive: dimension mismatch") {
  CHECK_THROWS_AS(circ_conv_naive(HyperVector(4), HyperVector(5)), DimensionError);
}

TEST_CASE("circ_conv_fft: agrees with the naive oracle") {
  Rng rng(3);
  for (std::size_t dim : {2UL, 3UL, 7UL, 31UL, 100UL, 128UL, 500UL, 1024UL}) {
    const HyperVector a = random_unit(dim, rng);
    const HyperVector b = random_unit(dim, rng);
    CHECK(max_abs_diff(circ_conv_fft(a, b), circ_conv_naive(a, b)) < 1e-9);
  }
}

TEST_CASE("circ_conv_fft: impulse identity within tolerance") {
  Rng rng(5);
  const HyperVector b = random_unit(128, rng);
  CHECK(max_abs_diff(circ_conv_fft(unit_impulse(128), b), b) < 1e-9);
}

TEST_CASE("circ_conv_fft: bilinear in the second argument") {
  Rng rng(7);
  const std::size_t dim = 256;
  const HyperVector a = random_unit(dim, rng);
  const HyperVector b = random_unit(dim, rng);
  const HyperVector c = random_unit(dim, rng);
  const HyperVector lhs = circ_conv_fft(a, b + c);
  const HyperVector rhs = circ_conv_fft(a, b) + circ_conv_fft(a, c);
  CHECK(max_abs_diff(lhs, rhs) < 1e-9);
}

TEST_CASE("involution: explicit example and self-inverse") {
  const HyperVector a({1.0, 2.0, 3.0, 4.0});
  const HyperVector rev = involution(a);
  CHECK(rev[0] == 1.0);
  CHECK(rev[1] == 4.0);
  CHECK(rev[2] == 3.0);
  CHECK(rev[3] == 2.0);

  Rng rng(9);
  const HyperVector v = random_unit(33, rng);
  CHECK(max_abs_diff(involution(involution(v)), v) == 0.0);
}

TEST_CASE("involution: conv with own involution puts |a|^2 at index 0") {
  Rng rng(13);
  const HyperVector a = random_unit(64, rng) * 1.7;
  const HyperVector out = circ_conv_naive(a, involution(a));
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) norm_sq += a[i] * a[i];
  CHECK(out[0] == doctest::Approx(norm_sq).epsilon(1e-12));
}

TEST_CASE("circ_corr: impulse cue returns the trace") {
  Rng rng(15);
  const HyperVector trace = random_unit(48, rng);
  CHECK(max_abs_diff(circ_corr(trace, unit_impulse(48)), trace) < 1e-12);
}

TEST_CASE("circ_corr: unbinds a single binding with high fidelity") {
  // Mean recovered cosine at dim 1024 sits near 1/sqrt(2); 0.7 is the
  // contract floor.
  const std::size_t dim = 1024;
  const int trials = 100;
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(90, static_cast<std::uint64_t>(t)));
    const HyperVector a = random_unit(dim, rng);
    const HyperVector b = random_unit(dim, rng);
    const HyperVector trace = circ_conv_naive(a, b);
    sum += cosine(circ_corr(trace, b), a);
  }
  CHECK(sum / trials >= 0.7);
}

TEST_CASE("circ_corr: superposed traces favor the right filler") {
  const std::size_t dim = 1024;
  const int trials = 100;
  int right = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(91, static_cast<std::uint64_t>(t)));
    const HyperVector a = random_unit(dim, rng);
    const HyperVector b = random_unit(dim, rng);
    const HyperVector c = random_unit(dim, rng);
    const HyperVector d = random_unit(dim, rng);
    const HyperVector trace = circ_conv(a, b) + circ_conv(c, d);
    const HyperVector recovered = circ_corr(trace, b);
    if (cosine(recovered, a) > cosine(recovered, c)) right += 1;
  }
  CHECK(right >= 95);
}

TEST_CASE("convolution norm: |a*b| tracks |a||b| for random unit vectors") {
  for (std::size_t dim : {256UL, 1024UL}) {
    double sum = 0.0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
      Rng rng(Rng::derive(92 + dim, static_cast<std::uint64_t>(t)));
      const HyperVector a = random_unit(dim, rng);
      const HyperVector b = random_unit(dim, rng);
      sum += circ_conv(a, b).norm();
    }
    const double mean = sum / trials;
    CHECK(mean > 0.9);
    CHECK(mean < 1.1);
  }
}

TEST_CASE("unbinding round-trip concentrates at 1/sqrt(2) as dimension grows") {
  // Correlation unbinding of a single Gaussian binding recovers the filler
  // with mean cosine 1/sqrt(2), approached from above; higher dimension
  // narrows the spread around that level rather than raising it.
  struct Stats {
    double mean;
    double stddev;
  };
  auto roundtrip = [](std::size_t dim) {
    double sum = 0.0;
    double sum_sq = 0.0;
    const int trials = 100;
    for (int t = 0; t < trials; ++t) {
      Rng rng(Rng::derive(93, static_cast<std::uint64_t>(t) * 1000 + dim));
      const HyperVector a = random_unit(dim, rng);
      const HyperVector b = random_unit(dim, rng);
      const double cos = cosine(circ_corr(circ_conv(a, b), b), a);
      sum += cos;
      sum_sq += cos * cos;
    }
    const double mean = sum / trials;
    return Stats{mean, std::sqrt(std::max(0.0, sum_sq / trials - mean * mean))};
  };
  const Stats at_128 = roundtrip(128);
  const Stats at_2048 = roundtrip(2048);
  const double asymptote = 1.0 / std::sqrt(2.0);
  CHECK(std::fabs(at_2048.mean - asymptote) < std::fabs(at_128.mean - asymptote) + 1e-3);
  CHECK(at_2048.mean == doctest::Approx(asymptote).epsilon(0.01));
  CHECK(at_2048.stddev < at_128.stddev);
}
