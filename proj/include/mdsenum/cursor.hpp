#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mdsenum {

// Resumable position inside a child generator's product enumeration. A
// generator rebuilds its context from (D*, u, v) and continues from the cursor,
// so stack records stay small.
struct GeneratorCursor {
  bool started = false;
  bool exhausted = false;
  // One digit per candidate slot Z_1..Z_k.
  std::vector<std::size_t> z_choice;
  // Case 3: active slot t (0-based) and position in N(u) ∩ Z_t.
  std::size_t slot = 0;
  std::size_t w_index = 0;
  // Girth generator: subset X of X2 as a little-endian binary counter, and
  // one digit per replacement set R_{j,t}.
  std::vector<std::uint8_t> x_mask;
  std::vector<std::size_t> r_choice;
};

// Advances a mixed-radix counter, last digit fastest. Returns false (and
// leaves the digits zeroed) on overflow. Digits whose radix is skipped via
// `frozen` never move.
inline bool advance_odometer(std::vector<std::size_t>& digits,
                             const std::vector<std::size_t>& radices,
                             std::size_t frozen = static_cast<std::size_t>(-1)) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (i == frozen) continue;
    if (++digits[i] < radices[i]) return true;
    digits[i] = 0;
  }
  return false;
}

// Binary counter, bit 0 least significant. False on overflow.
inline bool advance_mask(std::vector<std::uint8_t>& mask) {
  for (auto& bit : mask) {
    if (bit == 0) {
      bit = 1;
      return true;
    }
    bit = 0;
  }
  return false;
}

}  // namespace mdsenum
