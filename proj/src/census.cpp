#include "semiquad/census.hpp"

#include <algorithm>
#include <ostream>

#include "semiquad/hilbert.hpp"

namespace semiquad {

namespace {

bool allowed_binomial(Pair lead, Pair tail) {
  const int a = lead.left, b = lead.right, c = tail.left, d = tail.right;
  return (a >= b && b > c && c >= d) || (a > b && b == c && c > d);
}

struct QhsSearch {
  int n;
  std::vector<Pair> pairs;  // a >= b, rtl-descending
  std::vector<bool> used;
  std::vector<Relation> chosen;
  const PresentationVisitor* visit;

  void run(std::size_t from) {
    while (from < pairs.size() && used[from]) ++from;
    if (from == pairs.size()) {
      Presentation p(Alphabet(n), chosen);
      if (is_qhs(p)) (*visit)(p);
      return;
    }
    used[from] = true;
    chosen.push_back(Relation::zero(pairs[from]));
    run(from + 1);
    chosen.pop_back();
    for (std::size_t j = from + 1; j < pairs.size(); ++j) {
      if (used[j] || !allowed_binomial(pairs[from], pairs[j])) continue;
      used[j] = true;
      chosen.push_back(Relation::equal(pairs[from], pairs[j]));
      run(from + 1);
      chosen.pop_back();
      used[j] = false;
    }
    used[from] = false;
  }
};

}  // namespace

void for_each_qhs(int n, const PresentationVisitor& visit) {
  if (n < 1 || n > kMaxQhsEnumerationN) {
    throw UsageError("enumerate_qhs: n must be in 1.." + std::to_string(kMaxQhsEnumerationN));
  }
  QhsSearch s{n, {}, {}, {}, &visit};
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= a; ++b) s.pairs.push_back({static_cast<Letter>(a), static_cast<Letter>(b)});
  }
  std::sort(s.pairs.begin(), s.pairs.end(), [](Pair x, Pair y) { return rtl_lex_cmp(x, y) > 0; });
  s.used.assign(s.pairs.size(), false);
  s.run(0);
}

std::vector<Presentation> enumerate_qhs(int n) {
  std::vector<Presentation> out;
  for_each_qhs(n, [&](const Presentation& p) { out.push_back(p); });
  return out;
}

std::vector<Relation> all_relations(int n) {
  std::vector<Pair> pairs;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) pairs.push_back({static_cast<Letter>(a), static_cast<Letter>(b)});
  }
  std::vector<Relation> out;
  for (Pair q : pairs) out.push_back(Relation::zero(q));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) out.push_back(Relation::equal(pairs[i], pairs[j]));
  }
  return out;
}

void for_each_presentation(int n, std::size_t d_max, const PresentationVisitor& visit) {
  if (n < 1 || n > kMaxPresentationEnumerationN) {
    throw UsageError("enumerate_presentations: n must be in 1.." +
                     std::to_string(kMaxPresentationEnumerationN));
  }
  if (d_max > 4) throw UsageError("enumerate_presentations: d_max must be at most 4");
  const auto pool = all_relations(n);
  std::vector<std::size_t> idx;
  std::vector<Relation> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!chosen.empty()) visit(Presentation(Alphabet(n), chosen));
    if (chosen.size() == d_max) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

std::vector<Presentation> enumerate_presentations(int n, std::size_t d_max) {
  std::vector<Presentation> out;
  for_each_presentation(n, d_max, [&](const Presentation& p) { out.push_back(p); });
  return out;
}

PureBoundReport pure_bound_check(int n) {
  if (n < 1 || n > 4) throw UsageError("pure_bound_check: n must be in 1..4");
  PureBoundReport r;
  r.n = n;
  r.bound = (static_cast<std::int64_t>(n) * n + 2 * n + 3) / 4;
  for_each_qhs(n, [&](const Presentation& p) {
    ++r.qhs_count;
    if (!all_pure(p)) return;
    ++r.all_pure_count;
    ++r.size_histogram[p.size()];
    if (!r.min_size || p.size() < *r.min_size) r.min_size = p.size();
    if (static_cast<std::int64_t>(p.size()) < r.bound) ++r.violations;
  });
  return r;
}

SweepReport certificate_sweep(int n, std::size_t witness_k, const EngineLimits& limits) {
  if (n < 1 || n > kMaxPresentationEnumerationN) throw UsageError("certificate_sweep: n must be in 1..3");
  SweepReport r;
  r.n = n;
  r.d_bound = static_cast<std::size_t>((n * n + n) / 4);
  auto check = [&](const Presentation& p) {
    ++r.presentations;
    const Certificate c = find_certificate(p);
    if (!certificate_valid(c, p)) {
      r.failures.push_back(content_hash(p) + ": " + c.reason);
      return;
    }
    ++r.certified;
    if (c.type == Certificate::Type::ZeroSum) {
      ++r.zero_sum;
      return;
    }
    ++r.se_pair;
    if (witness_k == 0) return;
    ++r.witness_checked;
    if (!verify_witness(c, p, witness_k, limits)) {
      ++r.witness_failures;
      r.failures.push_back(content_hash(p) + ": witness is zero");
    }
  };
  check(Presentation(Alphabet(n), {}));
  if (r.d_bound > 0) for_each_presentation(n, r.d_bound, check);
  return r;
}

std::string certificate_tag(const Certificate& c) {
  switch (c.type) {
    case Certificate::Type::SePair:
      return "se_pair:" + std::to_string(c.a) + ":" + std::to_string(c.b);
    case Certificate::Type::ZeroSum: return "zero_sum";
    case Certificate::Type::None: return "none";
  }
  return "none";
}

CensusRecord census_record(const Presentation& p, const CensusCaps& caps) {
  CensusRecord r;
  r.id = content_hash(p);
  r.d = p.size();
  r.qhs = is_qhs(p);
  r.all_pure = r.qhs && all_pure(p);
  const Certificate c = find_certificate(p);
  r.certificate = certificate_tag(c);
  if (c.found()) {
    r.verdict = "infinite:certificate";
    return r;
  }
  EngineLimits limits;
  limits.max_class_size = caps.max_class_size;
  const HilbertProfile h = hilbert_profile(p, caps.max_degree, limits);
  r.verdict = h.finite() ? "finite:" + std::to_string(h.nilpotency_index)
                         : "unknown_up_to:" + std::to_string(h.truncated_at);
  return r;
}

namespace {

std::vector<CensusRecord> sorted(std::vector<CensusRecord> records) {
  std::sort(records.begin(), records.end(),
            [](const CensusRecord& x, const CensusRecord& y) { return x.id < y.id; });
  return records;
}

}  // namespace

std::vector<CensusRecord> qhs_census(int n, const CensusCaps& caps) {
  std::vector<CensusRecord> out;
  for_each_qhs(n, [&](const Presentation& p) { out.push_back(census_record(p, caps)); });
  return sorted(std::move(out));
}

std::vector<CensusRecord> presentation_census(int n, std::size_t d_max, const CensusCaps& caps) {
  std::vector<CensusRecord> out;
  for_each_presentation(n, d_max,
                        [&](const Presentation& p) { out.push_back(census_record(p, caps)); });
  return sorted(std::move(out));
}

void write_census_csv(std::ostream& out, const std::vector<CensusRecord>& records) {
  out << "id,d,qhs,all_pure,verdict,certificate\n";
  for (const auto& r : records) {
    out << r.id << ',' << r.d << ',' << (r.qhs ? "true" : "false") << ','
        << (r.all_pure ? "true" : "false") << ',' << r.verdict << ',' << r.certificate << '\n';
  }
}

}  // namespace semiquad
