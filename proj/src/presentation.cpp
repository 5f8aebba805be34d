#include "semiquad/presentation.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace semiquad {

std::strong_ordering rtl_lex_cmp(Pair p, Pair q) {
  if (p.right != q.right) return p.right <=> q.right;
  return p.left <=> q.left;
}

std::string render(Pair p) {
  return "x" + std::to_string(p.left) + "*x" + std::to_string(p.right);
}

Relation Relation::zero(Pair ab) { return Relation(Kind::Zero, ab, ab); }

Relation Relation::equal(Pair ab, Pair cd) {
  auto c = rtl_lex_cmp(ab, cd);
  if (c == 0) throw UsageError("binomial relation with identical sides: " + semiquad::render(ab));
  if (c < 0) std::swap(ab, cd);
  return Relation(Kind::Equal, ab, cd);
}

std::vector<Pair> Relation::support() const {
  if (is_zero()) return {lead_};
  return {lead_, tail_};
}

std::string Relation::render() const {
  if (is_zero()) return semiquad::render(lead_) + " = 0";
  return semiquad::render(lead_) + " = " + semiquad::render(tail_);
}

bool canonical_before(const Relation& r, const Relation& s) {
  if (auto c = rtl_lex_cmp(r.lead(), s.lead()); c != 0) return c > 0;
  if (r.kind() != s.kind()) return r.is_zero();
  if (r.is_zero()) return false;
  return rtl_lex_cmp(r.tail(), s.tail()) > 0;
}

Presentation::Presentation(Alphabet alphabet, std::vector<Relation> relations)
    : alphabet_(alphabet), relations_(std::move(relations)) {
  for (const auto& r : relations_) {
    for (Pair p : r.support()) {
      if (!alphabet_.contains(p.left) || !alphabet_.contains(p.right)) {
        throw UsageError("relation " + r.render() + " uses a generator outside x1..x" +
                         std::to_string(alphabet_.size()));
      }
    }
  }
  std::sort(relations_.begin(), relations_.end(), canonical_before);
  auto dup = std::adjacent_find(relations_.begin(), relations_.end());
  if (dup != relations_.end()) throw UsageError("duplicate relation: " + dup->render());
}

bool Presentation::contains(const Relation& r) const {
  return std::binary_search(relations_.begin(), relations_.end(), r, canonical_before);
}

bool Presentation::has_top_monomial() const { return contains(Relation::zero(top_pair())); }

std::vector<Relation> Presentation::relations_for(IdealMode mode) const {
  if (mode == IdealMode::FullM) return relations_;
  if (!has_top_monomial()) {
    throw UsageError("ideal mode WithoutTop needs the top monomial " + render(top_pair()));
  }
  std::vector<Relation> out;
  const Relation top = Relation::zero(top_pair());
  for (const auto& r : relations_) {
    if (!(r == top)) out.push_back(r);
  }
  return out;
}

std::string canonical_text(const Presentation& p) {
  std::string s = "generators " + std::to_string(p.n()) + "\n";
  for (const auto& r : p.relations()) s += r.render() + "\n";
  return s;
}

std::string content_hash(const Presentation& p) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text(p)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string to_string(QhsViolation::Kind kind) {
  switch (kind) {
    case QhsViolation::Kind::DisjointnessViolated: return "DisjointnessViolated";
    case QhsViolation::Kind::CoverageGap: return "CoverageGap";
    case QhsViolation::Kind::BadRelationShape: return "BadRelationShape";
    case QhsViolation::Kind::MissingTopMonomial: return "MissingTopMonomial";
  }
  return "?";
}

namespace {

bool allowed_binomial(Pair ab, Pair cd) {
  const int a = ab.left, b = ab.right, c = cd.left, d = cd.right;
  return (a >= b && b > c && c >= d) || (a > b && b == c && c > d);
}

}  // namespace

QhsReport validate_qhs(const Presentation& p) {
  using K = QhsViolation::Kind;
  QhsReport report;
  const int n = p.n();
  // owner[(a,b)] = index of the first relation whose support holds ab
  std::vector<int> owner(static_cast<std::size_t>(n * n), -1);
  auto slot = [n](Pair q) { return static_cast<std::size_t>((q.left - 1) * n + (q.right - 1)); };

  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    const Relation& r = p.relations()[i];
    if (r.is_zero()) {
      if (r.lead().left < r.lead().right) {
        report.violations.push_back({K::BadRelationShape, r.render() + ": zero monomial ab needs a >= b"});
      }
    } else if (!allowed_binomial(r.lead(), r.tail())) {
      report.violations.push_back(
          {K::BadRelationShape, r.render() + ": needs a>=b>c>=d or a>b=c>d"});
    }
    for (Pair q : r.support()) {
      int& o = owner[slot(q)];
      if (o >= 0) {
        report.violations.push_back({K::DisjointnessViolated,
                                     render(q) + " appears in " + p.relations()[o].render() +
                                         " and " + r.render()});
      } else {
        o = static_cast<int>(i);
      }
    }
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= a; ++b) {
      Pair q{static_cast<Letter>(a), static_cast<Letter>(b)};
      if (owner[slot(q)] < 0) {
        report.violations.push_back({K::CoverageGap, "pair " + render(q) + " not covered"});
      }
    }
  }
  if (!p.has_top_monomial()) {
    report.violations.push_back(
        {K::MissingTopMonomial, "top monomial " + render(p.top_pair()) + " = 0 absent"});
  }
  return report;
}

Presentation strip_top(const Presentation& p) {
  return Presentation(p.alphabet(), p.relations_for(IdealMode::WithoutTop));
}

bool is_pure(Letter c, const Presentation& p) {
  if (!is_qhs(p)) throw UsageError("is_pure: presentation is not a QHS");
  if (!p.alphabet().contains(c)) throw UsageError("is_pure: generator out of range");
  for (const auto& r : p.relations()) {
    if (r.is_zero() || r.tail().right != c) continue;
    if (!(r.lead().right > r.tail().left)) return false;
  }
  return true;
}

bool all_pure(const Presentation& p) {
  for (int c = 1; c <= p.n(); ++c) {
    if (!is_pure(static_cast<Letter>(c), p)) return false;
  }
  return true;
}

std::int64_t min_relation_count(std::int64_t n) {
  if (n < 1) throw UsageError("min_relation_count: n must be positive");
  const std::int64_t j = (n - 1) / 4;
  switch (n - 4 * j) {
    case 1: return 4 * j * j + 3 * j + 1;
    case 2: return 4 * j * j + 5 * j + 2;
    case 3: return 4 * j * j + 7 * j + 4;
    default: return 4 * j * j + 9 * j + 6;
  }
}

std::pair<std::int64_t, std::int64_t> qhs_cardinality_bounds(std::int64_t n) {
  return {min_relation_count(n), n * (n + 1) / 2};
}

}  // namespace semiquad
