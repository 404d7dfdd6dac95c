#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

namespace vpq {

/// Uniform in [lo, hi] from raw engine output, so samples are identical
/// across standard libraries.
inline long seeded_int(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

/// num/den with |num| <= numspan, 1 <= den <= denmax, reduced.
inline mpq_class seeded_rational(std::mt19937_64& rng, long numspan = 20, long denmax = 9) {
  const long num = seeded_int(rng, -numspan, numspan);
  const long den = seeded_int(rng, 1, denmax);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace vpq
