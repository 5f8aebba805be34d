#pragma once

#include <cstdint>

#include "semiquad/coset.hpp"
#include "semiquad/presentation.hpp"

namespace semiquad {

/// How build_regular_qhs(n) decomposes: a base QHS on `base_size`
/// generators followed by `steps` four-generator extensions.
struct TowerSpec {
  int n = 1;
  int steps = 0;
  int base_size = 1;

  static TowerSpec for_n(int n);
  std::int64_t expected_size() const { return min_relation_count(n); }
};

/// The four hand-made regular QHS on 1..4 generators (sizes 1, 2, 4, 6).
Presentation base_qhs(int m);

/// Four-generator extension of a QHS on m generators to one on n = m + 4.
///
/// The inner QHS is relabelled i -> i + 2 so it occupies x3..x_{n-2}; its top
/// monomial x_{n-2}*x3 is dropped and the new relations are
///
///   x_n*x_j     = x_j*x_1      for 2 <= j <= n-2
///   x_{n-1}*x_{j+1} = x_j*x_2  for 2 <= j <= n-3
///   x_n*x_n     = x_{n-1}*x_1
///   x_n*x_{n-1} = x_{n-2}*x_2
///   x_{n-1}*x_{n-1} = x_{n-2}*x_3
///   x_{n-1}*x_2 = x_1*x_1
///   x_n*x_1     = 0
///
/// The result has |inner| + 2n - 3 relations and is again a QHS.
/// Throws UsageError if `inner` is not a QHS.
Presentation extend(const Presentation& inner);

/// A regular QHS on n generators with exactly min_relation_count(n) relations.
Presentation build_regular_qhs(int n);

/// Length q of the x_1^q witness word: (5n-9)/2 for odd n, (5n-8)/2 for even n.
int top_suffix_word_length(int n);

/// True iff the class of x_1^q for build_regular_qhs(n), modulo the ideal
/// without the top monomial, holds a word ending in x_n. Throws ResourceExhausted if the class outgrows the
/// limits.
bool top_suffix_witness(int n, const EngineLimits& limits = {});

/// Same search for an arbitrary word and QHS: does the class of `w` modulo
/// the ideal without the top monomial contain a word ending in x_n?
bool class_reaches_top_suffix(const Word& w, const Presentation& p, const EngineLimits& limits = {});

/// Relation count of Wisliceny's finite-dimensional algebras on n generators.
std::int64_t wisliceny_count(std::int64_t n);

}  // namespace semiquad
