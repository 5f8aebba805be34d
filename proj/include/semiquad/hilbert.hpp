#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semiquad/coset.hpp"
#include "semiquad/presentation.hpp"

namespace semiquad {

/// Graded dimensions dim R_m of the quotient algebra R, counted as nonzero
/// monomial classes. dims[0] = 1 is the unit.
struct HilbertProfile {
  enum class Verdict { FiniteDimensional, UnknownUpTo };

  std::vector<std::uint64_t> dims{1};
  /// Last degree computed (or attempted, when truncated).
  std::size_t truncated_at = 0;
  Verdict verdict = Verdict::UnknownUpTo;
  /// FiniteDimensional: smallest m >= 1 with dims[m] = 0.
  std::size_t nilpotency_index = 0;
  /// Set when a class search ran out of resources.
  bool truncated = false;
  std::string note;

  bool finite() const noexcept { return verdict == Verdict::FiniteDimensional; }
};

/// Iterates the FullM minimal basis degree by degree up to `max_degree`,
/// stopping at the first empty degree. Any quadratic semigroup presentation
/// is accepted.
HilbertProfile hilbert_profile(const Presentation& p, std::size_t max_degree,
                               const EngineLimits& limits = {});

/// Sum of dims for finite profiles.
std::optional<std::uint64_t> total_dimension(const HilbertProfile& profile);

struct Dim3Report {
  std::uint64_t dim3 = 0;
  /// n^3 - 2dn
  std::int64_t gs_value = 0;
};

/// dim R_3 beside n^3 - 2dn, for display only.
Dim3Report dim3_report(const Presentation& p, const EngineLimits& limits = {});

}  // namespace semiquad
