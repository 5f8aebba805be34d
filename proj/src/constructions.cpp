#include "semiquad/constructions.hpp"

#include <string>
#include <vector>

namespace semiquad {

namespace {

Pair pr(int a, int b) { return {static_cast<Letter>(a), static_cast<Letter>(b)}; }
Relation eq(int a, int b, int c, int d) { return Relation::equal(pr(a, b), pr(c, d)); }
Relation zero(int a, int b) { return Relation::zero(pr(a, b)); }

}  // namespace

TowerSpec TowerSpec::for_n(int n) {
  if (n < 1) throw UsageError("tower: n must be positive");
  TowerSpec t;
  t.n = n;
  t.steps = (n - 1) / 4;
  t.base_size = n - 4 * t.steps;
  return t;
}

Presentation base_qhs(int m) {
  switch (m) {
    case 1:
      return Presentation(Alphabet(1), {zero(1, 1)});
    case 2:
      return Presentation(Alphabet(2), {eq(2, 2, 1, 1), zero(2, 1)});
    case 3:
      return Presentation(Alphabet(3), {eq(3, 3, 2, 1), eq(3, 2, 1, 1), zero(3, 1), zero(2, 2)});
    case 4:
      return Presentation(Alphabet(4), {eq(4, 4, 3, 1), eq(4, 3, 2, 1), eq(4, 2, 1, 1),
                                        eq(3, 3, 2, 2), zero(3, 2), zero(4, 1)});
    default:
      throw UsageError("base_qhs: m must be in 1..4, got " + std::to_string(m));
  }
}

Presentation extend(const Presentation& inner) {
  if (!is_qhs(inner)) throw UsageError("extend: inner presentation is not a QHS");
  const int n = inner.n() + 4;
  const Relation inner_top = Relation::zero(inner.top_pair());

  auto shift = [](Pair q) { return pr(q.left + 2, q.right + 2); };
  std::vector<Relation> rels;
  for (const auto& r : inner.relations()) {
    if (r == inner_top) continue;
    rels.push_back(r.is_zero() ? Relation::zero(shift(r.lead()))
                               : Relation::equal(shift(r.lead()), shift(r.tail())));
  }
  for (int j = 2; j <= n - 2; ++j) rels.push_back(eq(n, j, j, 1));
  for (int j = 2; j <= n - 3; ++j) rels.push_back(eq(n - 1, j + 1, j, 2));
  rels.push_back(eq(n, n, n - 1, 1));
  rels.push_back(eq(n, n - 1, n - 2, 2));
  rels.push_back(eq(n - 1, n - 1, n - 2, 3));
  rels.push_back(eq(n - 1, 2, 1, 1));
  rels.push_back(zero(n, 1));
  return Presentation(Alphabet(n), std::move(rels));
}

Presentation build_regular_qhs(int n) {
  const TowerSpec t = TowerSpec::for_n(n);
  Presentation p = base_qhs(t.base_size);
  for (int i = 0; i < t.steps; ++i) p = extend(p);
  return p;
}

int top_suffix_word_length(int n) {
  if (n < 5) throw UsageError("top_suffix_word_length: n must be at least 5");
  return n % 2 ? (5 * n - 9) / 2 : (5 * n - 8) / 2;
}

bool class_reaches_top_suffix(const Word& w, const Presentation& p, const EngineLimits& limits) {
  const RewriteSystem rules(p, IdealMode::WithoutTop);
  const char top = static_cast<char>(rules.top());
  detail::FixedWordSet seen;
  seen.reset(w.degree());
  seen.insert(w.key());
  std::string cur;
  for (std::size_t head = 0; head < seen.size(); ++head) {
    cur.assign(seen.at(head));
    if (cur.back() == top) return true;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const char a = cur[i], b = cur[i + 1];
      for (Pair q : rules.partners(static_cast<Letter>(a), static_cast<Letter>(b))) {
        cur[i] = static_cast<char>(q.left);
        cur[i + 1] = static_cast<char>(q.right);
        if (seen.insert(cur).second && seen.size() > limits.max_class_size) {
          throw ResourceExhausted(w, limits.max_class_size);
        }
      }
      cur[i] = a;
      cur[i + 1] = b;
    }
  }
  return false;
}

bool top_suffix_witness(int n, const EngineLimits& limits) {
  const int q = top_suffix_word_length(n);
  return class_reaches_top_suffix(Word::power(1, static_cast<std::size_t>(q)), build_regular_qhs(n),
                                  limits);
}

std::int64_t wisliceny_count(std::int64_t n) {
  if (n < 1) throw UsageError("wisliceny_count: n must be positive");
  return n % 2 == 0 ? (n * n + 2 * n) / 4 : (n * n + 2 * n + 1) / 4;
}

}  // namespace semiquad
