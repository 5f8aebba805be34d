#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiquad/coset.hpp"
#include "semiquad/presentation.hpp"

namespace semiquad {

/// Witness that a quadratic semigroup algebra is infinite dimensional.
///
///  - SePair(a, b): neither ab nor ba occurs in any relation, so no relation
///    can touch (ab)^k and it never enters the ideal.
///  - ZeroSum: every relation is a binomial, so every element of the ideal
///    has coefficient sum 0 and the ideal holds no monomial at all.
struct Certificate {
  enum class Type { SePair, ZeroSum, None };

  Type type = Type::None;
  Letter a = 0;
  Letter b = 0;
  std::string reason;                   // None only
  std::vector<std::string> transcript;  // human-readable verification steps

  static Certificate se_pair(Letter a, Letter b);
  static Certificate zero_sum();
  static Certificate none(std::string reason);

  bool found() const noexcept { return type != Type::None; }
};

/// Smallest (a, b) in lex order, a <= b, with ab and ba outside every
/// support.
std::optional<Certificate> find_se_pair(const Presentation& p);

/// True iff no relation is a zero monomial.
bool check_zero_sum(const Presentation& p);

/// Tries SePair, then ZeroSum. For d <= (n^2+n)/4 one of them always exists.
Certificate find_certificate(const Presentation& p);

/// Static validity check of a certificate against a presentation.
bool certificate_valid(const Certificate& cert, const Presentation& p);

/// True iff d <= (n^2+n)/4, i.e. 4d <= n^2 + n.
bool within_relation_bound(const Presentation& p);

/// Dynamic confirmation: the word (ab)^k is nonzero modulo the full ideal.
bool verify_witness(const Certificate& cert, const Presentation& p, std::size_t k,
                    const EngineLimits& limits = {});

}  // namespace semiquad
