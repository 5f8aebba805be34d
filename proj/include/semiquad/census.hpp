#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semiquad/certificate.hpp"
#include "semiquad/coset.hpp"
#include "semiquad/presentation.hpp"

namespace semiquad {

inline constexpr int kMaxQhsEnumerationN = 5;
inline constexpr int kMaxPresentationEnumerationN = 3;

using PresentationVisitor = std::function<void(const Presentation&)>;

/// Every QHS on n generators exactly once, in a fixed deterministic order.
void for_each_qhs(int n, const PresentationVisitor& visit);
std::vector<Presentation> enumerate_qhs(int n);

/// All n^2 zero monomials followed by all C(n^2, 2) binomials.
std::vector<Relation> all_relations(int n);

/// Every relation set of size 1..d_max (the empty set is not included).
void for_each_presentation(int n, std::size_t d_max, const PresentationVisitor& visit);
std::vector<Presentation> enumerate_presentations(int n, std::size_t d_max);

struct PureBoundReport {
  int n = 0;
  /// ceil((n^2 + 2n) / 4)
  std::int64_t bound = 0;
  std::size_t qhs_count = 0;
  std::size_t all_pure_count = 0;
  std::optional<std::size_t> min_size;
  std::size_t violations = 0;
  /// relation count -> number of all-pure QHS of that size
  std::map<std::size_t, std::size_t> size_histogram;

  bool holds() const noexcept { return violations == 0; }
};

PureBoundReport pure_bound_check(int n);

struct SweepReport {
  int n = 0;
  std::size_t d_bound = 0;
  std::size_t presentations = 0;
  std::size_t certified = 0;
  std::size_t se_pair = 0;
  std::size_t zero_sum = 0;
  std::size_t witness_checked = 0;
  std::size_t witness_failures = 0;
  std::vector<std::string> failures;

  bool complete() const noexcept {
    return certified == presentations && witness_failures == 0;
  }
};

/// Certifies every presentation with d <= floor((n^2+n)/4), the empty set
/// included. Each SePair is also confirmed dynamically with (ab)^k when
/// witness_k > 0.
SweepReport certificate_sweep(int n, std::size_t witness_k = 4, const EngineLimits& limits = {});

struct CensusCaps {
  std::size_t max_degree = 12;
  std::size_t max_class_size = 100'000;
};

struct CensusRecord {
  std::string id;
  std::size_t d = 0;
  bool qhs = false;
  bool all_pure = false;
  /// finite:<nilpotency index>, infinite:certificate, unknown_up_to:<degree>
  std::string verdict;
  /// se_pair:a:b, zero_sum or none
  std::string certificate;
};

CensusRecord census_record(const Presentation& p, const CensusCaps& caps = {});

/// Records sorted by id.
std::vector<CensusRecord> qhs_census(int n, const CensusCaps& caps = {});
std::vector<CensusRecord> presentation_census(int n, std::size_t d_max,
                                              const CensusCaps& caps = {});

std::string certificate_tag(const Certificate& c);
void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records);

}  // namespace semiquad
