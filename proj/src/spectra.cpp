#include "boolfn/spectra.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "boolfn/errors.hpp"

namespace boolfn {

namespace {

void guard(int m, int limit, const char* what) {
  if (m > limit) {
    throw CostGuardError(std::string(what) + " refuses m=" + std::to_string(m) + " (limit " + std::to_string(limit) +
                         ")");
  }
}

}  // namespace

std::int64_t WalshSpectrum::parseval_sum() const {
  std::int64_t total = 0;
  for (auto c : coeffs) total += static_cast<std::int64_t>(c) * c;
  return total;
}

WalshSpectrum wht_fast(const SignVector& f) {
  std::vector<std::int32_t> work(f.values().begin(), f.values().end());
  walsh_butterfly(std::span<std::int32_t>(work));
  return {f.m(), std::move(work)};
}

WalshSpectrum wht_naive(const SignVector& f) {
  guard(f.m(), kNaiveWalshMaxDimension, "wht_naive");
  const std::size_t q = f.size();
  const std::size_t block = std::min<std::size_t>(q, 64);
  const auto values = f.values();
  std::vector<std::int32_t> coeffs(q, 0);
  std::vector<std::int8_t> character(block);
  // Literal sum over every (v, x); the character splits as
  // (-1)^{v.x} = (-1)^{v.x_hi} (-1)^{v.x_lo} over 64-point blocks.
  for (std::uint64_t v = 0; v < q; ++v) {
    for (std::uint64_t lo = 0; lo < block; ++lo) character[lo] = static_cast<std::int8_t>(dot_parity(v, lo) ? -1 : 1);
    std::int32_t acc = 0;
    for (std::uint64_t base = 0; base < q; base += block) {
      std::int16_t partial = 0;  // |partial| <= 64
      for (std::size_t lo = 0; lo < block; ++lo) {
        partial = static_cast<std::int16_t>(partial + values[base + lo] * character[lo]);
      }
      acc += dot_parity(v, base) ? -partial : partial;
    }
    coeffs[v] = acc;
  }
  return {f.m(), std::move(coeffs)};
}

std::int64_t spectral_amplitude(const WalshSpectrum& sp) {
  std::int64_t best = 0;
  for (auto c : sp.coeffs) best = std::max<std::int64_t>(best, std::abs(static_cast<std::int64_t>(c)));
  return best;
}

std::int64_t nonlinearity(const WalshSpectrum& sp) {
  const std::int64_t s = spectral_amplitude(sp);
  return (std::int64_t{1} << (sp.m - 1)) - s / 2;
}

std::int64_t nonlinearity(const BooleanFunction& g) { return nonlinearity(wht_fast(sign(g))); }

std::int64_t nonlinearity_bruteforce(const BooleanFunction& g) {
  guard(g.m(), kBruteforceNonlinearityMaxDimension, "nonlinearity_bruteforce");
  auto best = static_cast<std::int64_t>(g.size());
  for (std::uint64_t v = 0; v < g.size(); ++v) {
    for (bool c : {false, true}) {
      best = std::min(best, static_cast<std::int64_t>(hamming_distance(g, affine(v, c, g.m()))));
    }
  }
  return best;
}

AutocorrSpectrum autocorrelation(const WalshSpectrum& sp) {
  const auto q = static_cast<std::int64_t>(sp.coeffs.size());
  // Partial sums stay within sum_v f^(v)^2 = q^2 <= 2^48.
  std::vector<std::int64_t> power(sp.coeffs.size());
  for (std::size_t v = 0; v < power.size(); ++v) power[v] = static_cast<std::int64_t>(sp.coeffs[v]) * sp.coeffs[v];
  walsh_butterfly(std::span<std::int64_t>(power));
  std::vector<std::int32_t> delta(power.size());
  for (std::size_t a = 0; a < power.size(); ++a) {
    if (power[a] % q != 0) throw std::logic_error("autocorrelation: spectral sum not divisible by q");
    delta[a] = static_cast<std::int32_t>(power[a] / q);
  }
  return {sp.m, std::move(delta)};
}

AutocorrSpectrum autocorrelation(const SignVector& f) { return autocorrelation(wht_fast(f)); }

AutocorrSpectrum autocorrelation_naive(const SignVector& f) {
  guard(f.m(), kNaiveAutocorrelationMaxDimension, "autocorrelation_naive");
  const std::size_t q = f.size();
  std::vector<std::int32_t> delta(q, 0);
  for (std::uint64_t a = 0; a < q; ++a) {
    std::int32_t acc = 0;
    for (std::uint64_t x = 0; x < q; ++x) acc += f[x] * f[x ^ a];
    delta[a] = acc;
  }
  return {f.m(), std::move(delta)};
}

std::int64_t autocorrelation_at(const BooleanFunction& g, std::uint64_t a) {
  if (a >= g.size()) throw RangeError("shift a must lie in [0, 2^m)");
  std::int64_t disagreements = 0;
  for (std::uint64_t x = 0; x < g.size(); ++x) disagreements += g[x] != g[x ^ a];
  return static_cast<std::int64_t>(g.size()) - 2 * disagreements;
}

wide_int l4_fourth(const WalshSpectrum& sp) {
  wide_int total = 0;
  for (auto c : sp.coeffs) {
    const wide_int sq = static_cast<wide_int>(static_cast<std::int64_t>(c) * c);
    total = checked_add(total, sq * sq);
  }
  const auto q = static_cast<wide_int>(sp.coeffs.size());
  if (total % q != 0) throw std::logic_error("l4_fourth: sum of fourth powers not divisible by q");
  return total / q;
}

wide_int l4_fourth(const SignVector& f) { return l4_fourth(wht_fast(f)); }

wide_int l4_fourth(const AutocorrSpectrum& ac) {
  wide_int total = 0;
  for (std::size_t a = 0; a < ac.delta.size(); ++a) total = checked_add(total, ac.squared(a));
  return total;
}

wide_int l4_fourth_quadruple(const SignVector& f) {
  guard(f.m(), kQuadrupleSumMaxDimension, "l4_fourth_quadruple");
  const std::size_t q = f.size();
  std::int64_t total = 0;
  for (std::uint64_t x1 = 0; x1 < q; ++x1) {
    for (std::uint64_t x2 = 0; x2 < q; ++x2) {
      const int p12 = f[x1] * f[x2];
      for (std::uint64_t x3 = 0; x3 < q; ++x3) total += p12 * f[x3] * f[x1 ^ x2 ^ x3];
    }
  }
  return total;
}

wide_int sum_of_squares(const AutocorrSpectrum& ac) {
  wide_int total = 0;
  for (std::size_t a = 1; a < ac.delta.size(); ++a) total = checked_add(total, ac.squared(a));
  return total;
}

SpectralSummary summarize(const BooleanFunction& g) {
  const auto sp = wht_fast(sign(g));
  const auto ac = autocorrelation(sp);
  return {g.m(), spectral_amplitude(sp), nonlinearity(sp), l4_fourth(sp), sum_of_squares(ac)};
}

}  // namespace boolfn
