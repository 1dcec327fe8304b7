#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "boolfn/boolean_function.hpp"
#include "boolfn/wide_int.hpp"

namespace boolfn {

// Cost guards for the quadratic/cubic oracles.
inline constexpr int kNaiveWalshMaxDimension = 14;
inline constexpr int kBruteforceNonlinearityMaxDimension = 10;
inline constexpr int kNaiveAutocorrelationMaxDimension = 12;
inline constexpr int kQuadrupleSumMaxDimension = 8;

/// Unnormalized Walsh coefficients: coeffs[v] = sum_x f(x) (-1)^{v.x}.
struct WalshSpectrum {
  int m;
  std::vector<std::int32_t> coeffs;

  /// sum_v coeffs[v]^2; equals q^2 for every sign vector.
  std::int64_t parseval_sum() const;
};

/// delta[a] = sum_x f(x) f(x+a). X_a = delta[a]^2, Y_a = X_a / q.
struct AutocorrSpectrum {
  int m;
  std::vector<std::int32_t> delta;

  std::int64_t squared(std::size_t a) const {
    return static_cast<std::int64_t>(delta[a]) * delta[a];
  }
  double normalized_squared(std::size_t a) const {
    return static_cast<double>(squared(a)) / static_cast<double>(delta.size());
  }
};

/// S, nl, the mass-1 fourth power ||f^||_4^4 = (1/q) sum_v f^(v)^4, and the
/// sum-of-squares indicator sum_{a != 0} X_a.
struct SpectralSummary {
  int m;
  std::int64_t spectral_amplitude;
  std::int64_t nonlinearity;
  wide_int l4_fourth;
  wide_int sum_of_squares;
};

/// In-place radix-2 Walsh-Hadamard butterfly over little-endian index bits.
/// Applying it twice multiplies the input by its length.
template <class T>
void walsh_butterfly(std::span<T> data) {
  const std::size_t n = data.size();
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += half << 1) {
      for (std::size_t j = block; j < block + half; ++j) {
        const T lo = data[j];
        const T hi = data[j + half];
        data[j] = lo + hi;
        data[j + half] = lo - hi;
      }
    }
  }
}

WalshSpectrum wht_fast(const SignVector& f);

/// O(q^2) literal sum; test oracle. Requires m <= 14.
WalshSpectrum wht_naive(const SignVector& f);

std::int64_t spectral_amplitude(const WalshSpectrum& sp);

/// 2^{m-1} - S/2, computed from the spectrum.
std::int64_t nonlinearity(const BooleanFunction& g);
std::int64_t nonlinearity(const WalshSpectrum& sp);

/// Minimum Hamming distance to all 2^{m+1} affine functions. Requires m <= 10.
std::int64_t nonlinearity_bruteforce(const BooleanFunction& g);

/// Spectral route: delta = (1/q) WHT(f^^2). O(q log q).
AutocorrSpectrum autocorrelation(const SignVector& f);
AutocorrSpectrum autocorrelation(const WalshSpectrum& sp);

/// Literal O(q^2) double loop. Requires m <= 12.
AutocorrSpectrum autocorrelation_naive(const SignVector& f);

/// delta[a] for a single shift in O(q), straight from the truth table.
std::int64_t autocorrelation_at(const BooleanFunction& g, std::uint64_t a);

/// (1/q) sum_v f^(v)^4; the division is checked to be exact.
wide_int l4_fourth(const WalshSpectrum& sp);
wide_int l4_fourth(const SignVector& f);

/// sum_a delta[a]^2.
wide_int l4_fourth(const AutocorrSpectrum& ac);

/// Literal sum over x1 + x2 + x3 + x4 = 0 of f(x1) f(x2) f(x3) f(x4). Requires m <= 8.
wide_int l4_fourth_quadruple(const SignVector& f);

/// sum_{a != 0} X_a.
wide_int sum_of_squares(const AutocorrSpectrum& ac);

SpectralSummary summarize(const BooleanFunction& g);

}  // namespace boolfn
