#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "modcartan/groupalg/ideals.hpp"

namespace modcartan::ar {

/// Checks for a group whose Sylow p-subgroup S is normal, with
/// I = sum over s in S of (s - 1) R[pi]:
///   two_sided      I is closed under multiplication on both sides
///   nilpotent      I^d = 0, d reported
///   quotient_ok    I is the kernel of R[pi] -> R[pi/S], g -> gS
///   radical_ok     I + rad(R) R[pi] equals the radical computed from the
///                  simple modules (lifted through R -> k over a chain ring)
struct NormalSylowReport {
  std::string sylow;           // element list of S
  std::size_t sylow_order = 0;
  std::string quotient;        // label of pi/S
  std::size_t ideal_length = 0;
  bool two_sided = false;
  std::optional<std::size_t> nilpotency;
  std::size_t nilpotency_cap = 0;
  bool quotient_ok = false;
  std::size_t kernel_length = 0;
  bool radical_ok = false;
  std::size_t radical_length = 0;
};

/// Throws SylowNotNormal. Nilpotency is searched up to t |pi| + 1 powers; an
/// ideal still nonzero there raises InternalError.
NormalSylowReport normal_sylow_checks(const grp::GroupPtr& g, la::ChainRing ring, std::uint64_t seed = 1);

}  // namespace modcartan::ar
