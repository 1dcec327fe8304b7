#pragma once

#include <cstdint>
#include <random>

namespace boolfn {

/// Domains for independent streams derived from one master seed.
enum class StreamDomain : std::uint32_t {
  kFunction = 0x66756e63,   // random truth tables
  kShiftPick = 0x73686674,  // shift/pair selection inside the ensemble suites
};

/// Engine for stream `index` under `master_seed`. Both seed_seq and
/// mt19937_64 are fully specified by the standard, so the stream is
/// identical on every conforming platform.
inline std::mt19937_64 make_stream(std::uint64_t master_seed, std::uint64_t index, StreamDomain domain) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(domain)};
  return std::mt19937_64(seq);
}

}  // namespace boolfn
