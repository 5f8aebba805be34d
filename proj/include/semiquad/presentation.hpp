#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiquad/word.hpp"

namespace semiquad {

/// A degree-2 monomial `left*right`, stored in reading order.
struct Pair {
  Letter left = 1;
  Letter right = 1;

  friend bool operator==(Pair, Pair) = default;
};

/// Right-to-left order on pairs: compare the right letter first.
std::strong_ordering rtl_lex_cmp(Pair p, Pair q);

std::string render(Pair p);

/// A quadratic semigroup relation: `ab = 0` or `ab = cd`.
///
/// Binomials are normalised so that `lead()` is the rtl-lex larger pair;
/// `ab - cd` and `cd - ab` generate the same ideal.
class Relation {
 public:
  enum class Kind { Zero, Equal };

  static Relation zero(Pair ab);
  static Relation equal(Pair ab, Pair cd);

  Kind kind() const noexcept { return kind_; }
  bool is_zero() const noexcept { return kind_ == Kind::Zero; }
  Pair lead() const noexcept { return lead_; }
  /// Only meaningful for Equal.
  Pair tail() const noexcept { return tail_; }

  std::vector<Pair> support() const;

  /// "x4*x2 = x1*x1" or "x4*x1 = 0"
  std::string render() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  Relation(Kind kind, Pair lead, Pair tail) : kind_(kind), lead_(lead), tail_(tail) {}

  Kind kind_;
  Pair lead_;
  Pair tail_;
};

/// Canonical relation order: lead pair rtl-descending, Zero before Equal,
/// then tail pair rtl-descending.
bool canonical_before(const Relation& r, const Relation& s);

/// Which ideal a presentation generates: all relations, or all but the top
/// monomial x_n*x_1.
enum class IdealMode { FullM, WithoutTop };

/// An ordered alphabet together with a duplicate-free, canonically sorted
/// list of relations. Immutable after construction.
class Presentation {
 public:
  /// Throws UsageError on out-of-range generators or duplicate relations.
  Presentation(Alphabet alphabet, std::vector<Relation> relations);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int n() const noexcept { return alphabet_.size(); }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  std::size_t size() const noexcept { return relations_.size(); }

  bool contains(const Relation& r) const;
  /// Whether Zero(n,1) is present.
  bool has_top_monomial() const;
  Pair top_pair() const noexcept { return {alphabet_.max(), alphabet_.min()}; }

  /// Relations generating the ideal selected by `mode`.
  std::vector<Relation> relations_for(IdealMode mode) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Relation> relations_;
};

/// Plain-text form in canonical order, the basis for hashing and files.
std::string canonical_text(const Presentation& p);

/// FNV-1a over the canonical text, as 16 hex digits.
std::string content_hash(const Presentation& p);

struct QhsViolation {
  enum class Kind { DisjointnessViolated, CoverageGap, BadRelationShape, MissingTopMonomial };
  Kind kind;
  std::string detail;
};

std::string to_string(QhsViolation::Kind kind);

struct QhsReport {
  std::vector<QhsViolation> violations;
  bool valid() const noexcept { return violations.empty(); }
};

QhsReport validate_qhs(const Presentation& p);
inline bool is_qhs(const Presentation& p) { return validate_qhs(p).valid(); }

/// M' = M minus x_n*x_1. Throws UsageError if the top monomial is absent.
Presentation strip_top(const Presentation& p);

/// A generator c is pure when no relation ab - cd with a > b = c > d has
/// c as its final letter d. Throws UsageError for non-QHS input.
bool is_pure(Letter c, const Presentation& p);
bool all_pure(const Presentation& p);

/// Smallest integer strictly greater than (n^2+n)/4, via the piecewise form
/// on n mod 4.
std::int64_t min_relation_count(std::int64_t n);

/// (min_relation_count(n), n(n+1)/2): the range of QHS cardinalities on n
/// generators.
std::pair<std::int64_t, std::int64_t> qhs_cardinality_bounds(std::int64_t n);

}  // namespace semiquad
