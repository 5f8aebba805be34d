#include "semiquad/hilbert.hpp"

namespace semiquad {

HilbertProfile hilbert_profile(const Presentation& p, std::size_t max_degree,
                               const EngineLimits& limits) {
  if (max_degree == 0) throw UsageError("hilbert_profile: max_degree must be positive");
  HilbertProfile prof;
  MinimalBasis basis = initial_basis(p, IdealMode::FullM);
  prof.dims.push_back(basis.minimals.size());
  prof.truncated_at = 1;
  while (!basis.minimals.empty() && basis.degree < max_degree) {
    try {
      basis = next_minimal_basis(basis, p, limits);
    } catch (const ResourceExhausted& e) {
      prof.truncated = true;
      prof.truncated_at = basis.degree + 1;
      prof.note = e.what();
      prof.verdict = HilbertProfile::Verdict::UnknownUpTo;
      return prof;
    }
    prof.dims.push_back(basis.minimals.size());
    prof.truncated_at = basis.degree;
  }
  if (basis.minimals.empty()) {
    prof.verdict = HilbertProfile::Verdict::FiniteDimensional;
    prof.nilpotency_index = basis.degree;
  }
  return prof;
}

std::optional<std::uint64_t> total_dimension(const HilbertProfile& profile) {
  if (!profile.finite()) return std::nullopt;
  std::uint64_t total = 0;
  for (auto d : profile.dims) total += d;
  return total;
}

Dim3Report dim3_report(const Presentation& p, const EngineLimits& limits) {
  MinimalBasis basis = initial_basis(p, IdealMode::FullM);
  while (basis.degree < 3) basis = next_minimal_basis(basis, p, limits);
  Dim3Report r;
  r.dim3 = basis.minimals.size();
  const std::int64_t n = p.n(), d = static_cast<std::int64_t>(p.size());
  r.gs_value = n * n * n - 2 * d * n;
  return r;
}

}  // namespace semiquad
