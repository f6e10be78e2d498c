#pragma once

#include <cstddef>
#include <cstdint>

namespace hibi {

/// Resource limits for the exponential-time searches.
///
/// Environment overrides: HIBI_MAX_ELEMENTS, HIBI_MAX_STATES,
/// HIBI_ORACLE_MAX_ELEMENTS, HIBI_ORACLE_MAX_Q. Any call may also pass its
/// own Caps value.
struct Caps {
  /// Element cap for lattice/ideal enumeration (#J(P) can be 2^#P).
  std::size_t max_elements = 20;
  /// Cap on visited path prefixes in the Hasse-diagram searches.
  std::uint64_t max_states = 10'000'000;
  /// Element cap for the brute-force Frobenius oracle.
  std::size_t oracle_max_elements = 5;
  /// Largest q the oracle accepts by default.
  long oracle_max_q = 3;

  static Caps from_env();
};

/// Process-wide defaults, read from the environment once.
const Caps& default_caps();

}  // namespace hibi
