#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiquad/detail/word_set.hpp"
#include "semiquad/presentation.hpp"
#include "semiquad/word.hpp"

namespace semiquad {

struct EngineLimits {
  std::size_t max_class_size = 5'000'000;
  std::size_t max_degree = 64;
  /// Worker threads for per-degree candidate evaluation.
  unsigned workers = 1;
};

/// A coset class grew past EngineLimits::max_class_size. The computation is
/// inconclusive; no verdict is implied.
class ResourceExhausted : public std::runtime_error {
 public:
  ResourceExhausted(Word word, std::size_t class_size);

  const Word& word() const noexcept { return word_; }
  std::size_t class_size() const noexcept { return class_size_; }

 private:
  Word word_;
  std::size_t class_size_;
};

/// Quadratic rewriting data derived from a presentation in one ideal mode:
/// an n x n zero-pair table and, per pair, the pairs it may be swapped with.
class RewriteSystem {
 public:
  RewriteSystem(const Presentation& p, IdealMode mode);

  int n() const noexcept { return n_; }
  Letter top() const noexcept { return static_cast<Letter>(n_); }

  bool is_zero_pair(Letter a, Letter b) const noexcept { return zero_[slot(a, b)]; }
  const std::vector<Pair>& partners(Letter a, Letter b) const noexcept {
    return partners_[slot(a, b)];
  }
  bool has_zero_factor(const Word& w) const noexcept;

 private:
  std::size_t slot(Letter a, Letter b) const noexcept {
    return static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(n_) + (b - 1);
  }

  int n_;
  std::vector<bool> zero_;
  std::vector<std::vector<Pair>> partners_;
};

/// The equivalence class of a word modulo the selected ideal.
struct CosetClass {
  std::size_t degree = 0;
  bool zero = false;
  /// Full class in BFS discovery order; empty when zero.
  std::vector<Word> members;
  /// rtl-lex minimum of `members`; unset when zero.
  Word minimal;
};

enum class Classification { Tame, Singular, NonMinimal, Zero };

std::string to_string(Classification c);

/// Whether minimal word `u` is tame given its class: some member carries the
/// top generator at a position after which it agrees with `u`.
bool is_tame(const Word& u, const std::vector<Word>& members, Letter top);

/// BFS over binomial swaps (both directions, every position). Zero as soon as
/// a visited word holds a zero pair as an adjacent factor.
CosetClass coset_class(const Word& w, const Presentation& p, IdealMode mode,
                       const EngineLimits& limits = {});

/// Minimal representative, or nullopt when the word lies in the ideal.
std::optional<Word> minimal_monomial(const Word& w, const Presentation& p, IdealMode mode,
                                     const EngineLimits& limits = {});

/// Tame / Singular / NonMinimal / Zero modulo the ideal without the top
/// monomial. `mode` must be WithoutTop.
Classification classify(const Word& w, const Presentation& p,
                        IdealMode mode = IdealMode::WithoutTop, const EngineLimits& limits = {});

/// Decides what a candidate word is by searching its class from the word
/// itself. The search stops as soon as the answer is known: a zero factor, a
/// member smaller than the candidate, or (for Goal::Singularity) a member
/// witnessing tameness. Only a candidate that is minimal has its class
/// explored completely. Buffers are reused across calls; one probe per
/// thread.
class CandidateProbe {
 public:
  enum class Goal {
    Minimality,   // Zero / NonMinimal / Minimal
    Tameness,     // Zero / NonMinimal / Tame / Singular
    Singularity,  // Singular / NotSingular
  };
  enum class Verdict { Zero, NonMinimal, Minimal, Tame, Singular, NotSingular };

  CandidateProbe(const RewriteSystem& rules, std::size_t max_class_size, Goal goal);

  Verdict resolve(const Word& w);
  /// Words visited by the last resolve().
  std::size_t last_visited() const noexcept { return seen_.size(); }

 private:
  const RewriteSystem* rules_;
  std::size_t max_class_size_;
  Goal goal_;
  detail::FixedWordSet seen_;
};

/// Minimal monomials of one degree. `singular` is filled only in WithoutTop
/// mode.
struct MinimalBasis {
  std::size_t degree = 0;
  IdealMode mode = IdealMode::FullM;
  std::vector<Word> minimals;
  std::vector<Word> singular;
};

MinimalBasis initial_basis(const Presentation& p, IdealMode mode);

/// Degree m+1 basis from the degree m basis. Candidates u*x whose length-m
/// suffix is not itself minimal are skipped before any class search.
/// Throws ResourceExhausted tagged with the offending candidate.
MinimalBasis next_minimal_basis(const MinimalBasis& basis, const Presentation& p,
                                const EngineLimits& limits = {});

/// Singular words of degree k+1 from those of degree k.
std::vector<Word> next_singular(const std::vector<Word>& singular_k, const Presentation& p,
                                const EngineLimits& limits = {});

/// All singular words of degree m, sorted rtl-lex. Requires a QHS.
std::vector<Word> singular_monomials(const Presentation& p, std::size_t m,
                                     const EngineLimits& limits = {});

struct RegularityResult {
  enum class Status { Regular, IrregularUpTo, Inconclusive };
  Status status = Status::Inconclusive;
  /// Regular: first degree with no singular words. IrregularUpTo: the cap.
  /// Inconclusive: the degree being computed when resources ran out.
  std::size_t degree = 0;
  /// Sizes of the singular sets, index = degree (index 0 unused).
  std::vector<std::size_t> singular_counts;
  std::string note;

  std::size_t nilpotency_bound() const { return degree + 1; }
};

std::string to_string(RegularityResult::Status s);

RegularityResult regularity_degree(const Presentation& p, const EngineLimits& limits = {});

}  // namespace semiquad
