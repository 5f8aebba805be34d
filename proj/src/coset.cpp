#include "semiquad/coset.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <unordered_set>

namespace semiquad {

ResourceExhausted::ResourceExhausted(Word word, std::size_t class_size)
    : std::runtime_error("coset class of " + word.render() + " exceeded " +
                         std::to_string(class_size) + " words"),
      word_(std::move(word)),
      class_size_(class_size) {}

RewriteSystem::RewriteSystem(const Presentation& p, IdealMode mode)
    : n_(p.n()),
      zero_(static_cast<std::size_t>(n_ * n_), false),
      partners_(static_cast<std::size_t>(n_ * n_)) {
  for (const auto& r : p.relations_for(mode)) {
    if (r.is_zero()) {
      zero_[slot(r.lead().left, r.lead().right)] = true;
    } else {
      partners_[slot(r.lead().left, r.lead().right)].push_back(r.tail());
      partners_[slot(r.tail().left, r.tail().right)].push_back(r.lead());
    }
  }
}

bool RewriteSystem::has_zero_factor(const Word& w) const noexcept {
  for (std::size_t i = 0; i + 1 < w.degree(); ++i) {
    if (is_zero_pair(w[i], w[i + 1])) return true;
  }
  return false;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Tame: return "tame";
    case Classification::Singular: return "singular";
    case Classification::NonMinimal: return "non-minimal";
    case Classification::Zero: return "zero";
  }
  return "?";
}

namespace {

inline Letter at(std::string_view s, std::size_t i) { return static_cast<Letter>(s[i]); }

bool rtl_less_key(std::string_view u, std::string_view v) {
  for (std::size_t i = u.size(); i-- > 0;) {
    if (u[i] != v[i]) return at(u, i) < at(v, i);
  }
  return false;
}

// A member v witnesses tameness of u if v_j = top at some position j with
// v_l = u_l for all l > j. With s the common suffix length that means
// j >= m - s (1-based).
bool witnesses_tame(std::string_view u, std::string_view v, Letter top) {
  const std::size_t m = u.size();
  std::size_t s = 0;
  while (s < m && u[m - 1 - s] == v[m - 1 - s]) ++s;
  const std::size_t first = (s >= m) ? 0 : m - s - 1;
  for (std::size_t i = first; i < m; ++i) {
    if (at(v, i) == top) return true;
  }
  return false;
}

bool has_zero_factor_key(const RewriteSystem& rules, std::string_view w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (rules.is_zero_pair(at(w, i), at(w, i + 1))) return true;
  }
  return false;
}

// Zero pairs that can appear after rewriting positions i, i+1 of v.
bool new_zero_factor(const RewriteSystem& rules, std::string_view v, std::size_t i) {
  return (i > 0 && rules.is_zero_pair(at(v, i - 1), at(v, i))) ||
         rules.is_zero_pair(at(v, i), at(v, i + 1)) ||
         (i + 2 < v.size() && rules.is_zero_pair(at(v, i + 1), at(v, i + 2)));
}

// Breadth-first walk of the swap component of `start`. `visit(v, i)` is called
// for each newly discovered word (i = rewritten position) and returns true to
// stop the walk.
template <typename Visit>
void walk_class(const RewriteSystem& rules, detail::FixedWordSet& seen, std::string_view start,
                std::size_t max_class_size, const Word& tag, Visit visit) {
  seen.reset(start.size());
  seen.insert(start);
  std::string cur;
  for (std::size_t head = 0; head < seen.size(); ++head) {
    cur.assign(seen.at(head));
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const char a = cur[i], b = cur[i + 1];
      for (Pair q : rules.partners(static_cast<Letter>(a), static_cast<Letter>(b))) {
        cur[i] = static_cast<char>(q.left);
        cur[i + 1] = static_cast<char>(q.right);
        if (!seen.insert(cur).second) continue;
        if (seen.size() > max_class_size) throw ResourceExhausted(tag, max_class_size);
        if (visit(std::string_view(cur), i)) return;
      }
      cur[i] = a;
      cur[i + 1] = b;
    }
  }
}

}  // namespace

bool is_tame(const Word& u, const std::vector<Word>& members, Letter top) {
  return std::any_of(members.begin(), members.end(),
                     [&](const Word& v) { return witnesses_tame(u.key(), v.key(), top); });
}

CosetClass coset_class(const Word& w, const Presentation& p, IdealMode mode,
                       const EngineLimits& limits) {
  if (w.empty()) throw UsageError("coset_class: empty word");
  for (std::size_t i = 0; i < w.degree(); ++i) {
    if (!p.alphabet().contains(w[i])) throw UsageError("coset_class: letter outside alphabet");
  }
  const RewriteSystem rules(p, mode);
  CosetClass out;
  out.degree = w.degree();
  if (has_zero_factor_key(rules, w.key())) {
    out.zero = true;
    return out;
  }
  detail::FixedWordSet seen;
  walk_class(rules, seen, w.key(), limits.max_class_size, w, [&](std::string_view v, std::size_t i) {
    return out.zero = new_zero_factor(rules, v, i);
  });
  if (out.zero) return out;

  out.members.reserve(seen.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    out.members.push_back(Word::from_key(seen.at(i)));
    if (rtl_less_key(seen.at(i), seen.at(best))) best = i;
  }
  out.minimal = out.members[best];
  return out;
}

std::optional<Word> minimal_monomial(const Word& w, const Presentation& p, IdealMode mode,
                                     const EngineLimits& limits) {
  CosetClass c = coset_class(w, p, mode, limits);
  if (c.zero) return std::nullopt;
  return std::move(c.minimal);
}

Classification classify(const Word& w, const Presentation& p, IdealMode mode,
                        const EngineLimits& limits) {
  if (mode != IdealMode::WithoutTop) {
    throw UsageError("classify: tameness is defined in WithoutTop mode");
  }
  CosetClass c = coset_class(w, p, mode, limits);
  if (c.zero) return Classification::Zero;
  if (!(c.minimal == w)) return Classification::NonMinimal;
  return is_tame(w, c.members, p.alphabet().max()) ? Classification::Tame
                                                    : Classification::Singular;
}

// ---------------------------------------------------------------------------

CandidateProbe::CandidateProbe(const RewriteSystem& rules, std::size_t max_class_size, Goal goal)
    : rules_(&rules), max_class_size_(max_class_size), goal_(goal) {}

CandidateProbe::Verdict CandidateProbe::resolve(const Word& w) {
  const bool singularity = goal_ == Goal::Singularity;
  const bool want_witness = goal_ != Goal::Minimality;
  const std::string_view start = w.key();
  const Letter top = rules_->top();

  if (has_zero_factor_key(*rules_, start)) return singularity ? Verdict::NotSingular : Verdict::Zero;
  bool tame = want_witness && witnesses_tame(start, start, top);
  if (tame && singularity) return Verdict::NotSingular;

  enum class Stop { None, Zero, Smaller, Witness } stop = Stop::None;
  walk_class(*rules_, seen_, start, max_class_size_, w, [&](std::string_view v, std::size_t i) {
    if (new_zero_factor(*rules_, v, i)) {
      stop = Stop::Zero;
    } else if (rtl_less_key(v, start)) {
      stop = Stop::Smaller;
    } else if (want_witness && !tame && witnesses_tame(start, v, top)) {
      tame = true;
      if (singularity) stop = Stop::Witness;
    }
    return stop != Stop::None;
  });

  if (singularity) return stop == Stop::None ? Verdict::Singular : Verdict::NotSingular;
  switch (stop) {
    case Stop::Zero: return Verdict::Zero;
    case Stop::Smaller: return Verdict::NonMinimal;
    default: break;
  }
  if (goal_ == Goal::Minimality) return Verdict::Minimal;
  return tame ? Verdict::Tame : Verdict::Singular;
}

// ---------------------------------------------------------------------------

namespace {

enum : char { kDrop = 0, kMinimal = 1, kSingular = 2 };

char mark(CandidateProbe::Verdict v) {
  switch (v) {
    case CandidateProbe::Verdict::Minimal:
    case CandidateProbe::Verdict::Tame: return kMinimal;
    case CandidateProbe::Verdict::Singular: return kSingular;
    default: return kDrop;
  }
}

// Resolves every candidate with `workers` threads, each owning a probe and a
// contiguous chunk. Marks are per candidate, so the merged result does not
// depend on the worker count. The first exception in candidate order wins.
std::vector<char> mark_candidates(const std::vector<Word>& candidates, const RewriteSystem& rules,
                                  const EngineLimits& limits, CandidateProbe::Goal goal) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(limits.workers, candidates.size()));
  std::vector<char> marks(candidates.size(), kDrop);
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (candidates.size() + workers - 1) / workers;

  auto run = [&](std::size_t t) {
    CandidateProbe probe(rules, limits.max_class_size, goal);
    const std::size_t lo = t * chunk, hi = std::min(candidates.size(), lo + chunk);
    try {
      for (std::size_t i = lo; i < hi; ++i) marks[i] = mark(probe.resolve(candidates[i]));
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return marks;
}

// u*x for u in `words` whose length-m suffix is in `words` too. Minimality
// and singularity are both inherited by factors, so nothing else can qualify.
std::vector<Word> closed_extensions(const std::vector<Word>& words, int n) {
  std::unordered_set<std::string_view> allowed;
  allowed.reserve(words.size());
  for (const auto& w : words) allowed.insert(w.key());
  std::vector<Word> out;
  for (const auto& u : words) {
    for (int x = 1; x <= n; ++x) {
      Word cand = u.appended(static_cast<Letter>(x));
      if (allowed.count(cand.key().substr(1))) out.push_back(std::move(cand));
    }
  }
  return out;
}

void sort_rtl(std::vector<Word>& words) { std::sort(words.begin(), words.end(), rtl_less); }

void check_letters(const std::vector<Word>& words, const Presentation& p) {
  for (const auto& w : words) {
    for (std::size_t i = 0; i < w.degree(); ++i) {
      if (!p.alphabet().contains(w[i])) throw UsageError("word uses a letter outside the alphabet");
    }
  }
}

}  // namespace

MinimalBasis initial_basis(const Presentation& p, IdealMode mode) {
  MinimalBasis b;
  b.degree = 1;
  b.mode = mode;
  for (int x = 1; x <= p.n(); ++x) {
    b.minimals.push_back(Word{x});
    if (mode == IdealMode::WithoutTop && x != p.n()) b.singular.push_back(Word{x});
  }
  return b;
}

MinimalBasis next_minimal_basis(const MinimalBasis& basis, const Presentation& p,
                                const EngineLimits& limits) {
  check_letters(basis.minimals, p);
  const RewriteSystem rules(p, basis.mode);
  const bool track_tame = basis.mode == IdealMode::WithoutTop;
  MinimalBasis out;
  out.degree = basis.degree + 1;
  out.mode = basis.mode;
  const auto candidates = closed_extensions(basis.minimals, p.n());
  const auto goal = track_tame ? CandidateProbe::Goal::Tameness : CandidateProbe::Goal::Minimality;
  const auto marks = mark_candidates(candidates, rules, limits, goal);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (marks[i] == kDrop) continue;
    out.minimals.push_back(candidates[i]);
    if (track_tame && marks[i] == kSingular) out.singular.push_back(candidates[i]);
  }
  sort_rtl(out.minimals);
  sort_rtl(out.singular);
  return out;
}

std::vector<Word> next_singular(const std::vector<Word>& singular_k, const Presentation& p,
                                const EngineLimits& limits) {
  check_letters(singular_k, p);
  const RewriteSystem rules(p, IdealMode::WithoutTop);
  const auto candidates = closed_extensions(singular_k, p.n());
  const auto marks = mark_candidates(candidates, rules, limits, CandidateProbe::Goal::Singularity);
  std::vector<Word> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (marks[i] == kSingular) out.push_back(candidates[i]);
  }
  sort_rtl(out);
  return out;
}

std::vector<Word> singular_monomials(const Presentation& p, std::size_t m,
                                     const EngineLimits& limits) {
  if (!is_qhs(p)) throw UsageError("singular_monomials: presentation is not a QHS");
  if (m == 0) throw UsageError("singular_monomials: degree must be positive");
  std::vector<Word> s = initial_basis(p, IdealMode::WithoutTop).singular;
  for (std::size_t k = 1; k < m && !s.empty(); ++k) s = next_singular(s, p, limits);
  return s;
}

std::string to_string(RegularityResult::Status s) {
  switch (s) {
    case RegularityResult::Status::Regular: return "regular";
    case RegularityResult::Status::IrregularUpTo: return "irregular_up_to";
    case RegularityResult::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

RegularityResult regularity_degree(const Presentation& p, const EngineLimits& limits) {
  if (!is_qhs(p)) throw UsageError("regularity_degree: presentation is not a QHS");
  RegularityResult r;
  r.singular_counts.push_back(0);
  std::vector<Word> s = initial_basis(p, IdealMode::WithoutTop).singular;
  std::size_t m = 1;
  for (;;) {
    r.singular_counts.push_back(s.size());
    if (s.empty()) {
      r.status = RegularityResult::Status::Regular;
      r.degree = m;
      return r;
    }
    if (m >= limits.max_degree) {
      r.status = RegularityResult::Status::IrregularUpTo;
      r.degree = m;
      return r;
    }
    try {
      s = next_singular(s, p, limits);
    } catch (const ResourceExhausted& e) {
      r.status = RegularityResult::Status::Inconclusive;
      r.degree = m + 1;
      r.note = e.what();
      return r;
    }
    ++m;
  }
}

}  // namespace semiquad
