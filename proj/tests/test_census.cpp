#include <doctest.h>

#include <set>
#include <sstream>

#include "semiquad/census.hpp"
#include "semiquad/constructions.hpp"

using namespace semiquad;

namespace {

// Recount QHS by filtering subsets of candidate relations through
// validate_qhs. For n = 2 every subset of all 10 relations is tried; for
// n = 3 the subsets of the 21 relations inside the lower pairs, pruned to
// disjoint supports first.
std::size_t brute_qhs_count(int n) {
  std::vector<Relation> pool;
  if (n == 2) {
    pool = all_relations(2);
  } else {
    for (const auto& r : all_relations(n)) {
      bool lower = true;
      for (Pair q : r.support()) lower &= q.left >= q.right;
      if (lower) pool.push_back(r);
    }
  }
  std::vector<unsigned> mask(pool.size(), 0);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (Pair q : pool[i].support()) mask[i] |= 1u << ((q.left - 1) * n + q.right - 1);
  }
  std::size_t count = 0;
  for (unsigned long s = 0; s < (1ul << pool.size()); ++s) {
    unsigned used = 0;
    bool disjoint = true;
    std::vector<Relation> chosen;
    for (std::size_t i = 0; i < pool.size() && disjoint; ++i) {
      if (!(s >> i & 1)) continue;
      if (n != 2 && (used & mask[i])) disjoint = false;
      used |= mask[i];
      chosen.push_back(pool[i]);
    }
    if (!disjoint) continue;
    if (is_qhs(Presentation(Alphabet(n), chosen))) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("census") {
  TEST_CASE("QHS counts") {
    CHECK(enumerate_qhs(1).size() == 1);
    CHECK(enumerate_qhs(2).size() == 2);
    CHECK(enumerate_qhs(3).size() == 13);
    CHECK(enumerate_qhs(4).size() == 331);
    CHECK(enumerate_qhs(1)[0] == base_qhs(1));
    CHECK_THROWS_AS(enumerate_qhs(6), UsageError);
    CHECK_THROWS_AS(enumerate_qhs(0), UsageError);
  }

  TEST_CASE("QHS counts match a brute-force recount") {
    CHECK(brute_qhs_count(2) == enumerate_qhs(2).size());
    CHECK(brute_qhs_count(3) == enumerate_qhs(3).size());
  }

  TEST_CASE("enumerated QHS are valid, distinct and within the cardinality range") {
    for (int n = 1; n <= 4; ++n) {
      std::set<std::string> ids;
      const auto [lo, hi] = qhs_cardinality_bounds(n);
      for_each_qhs(n, [&](const Presentation& p) {
        REQUIRE(is_qhs(p));
        REQUIRE(static_cast<std::int64_t>(p.size()) >= lo);
        REQUIRE(static_cast<std::int64_t>(p.size()) <= hi);
        REQUIRE(ids.insert(canonical_text(p)).second);
      });
    }
    for (const auto& p : enumerate_qhs(3)) {
      CHECK(p.size() >= 4);
      CHECK(p.size() <= 6);
    }
  }

  TEST_CASE("presentation counts") {
    CHECK(enumerate_presentations(2, 1).size() == 10);
    CHECK(enumerate_presentations(1, 1).size() == 1);
    std::size_t count = 0;
    for_each_presentation(3, 3, [&](const Presentation&) { ++count; });
    CHECK(count == 45 + 990 + 14190);
    CHECK(all_relations(3).size() == 45);
    CHECK_THROWS_AS(enumerate_presentations(4, 1), UsageError);
  }

  TEST_CASE("all-pure QHS respect the size bound") {
    auto r = pure_bound_check(3);
    CHECK(r.holds());
    CHECK(r.bound == 4);
    CHECK(r.min_size == 4u);
    r = pure_bound_check(4);
    CHECK(r.holds());
    CHECK(r.bound == 6);
    CHECK(r.min_size == 6u);
    CHECK(r.size_histogram.count(5) == 0);
  }

  TEST_CASE("certificate sweeps") {
    auto r = certificate_sweep(2);
    CHECK(r.presentations == 11);
    CHECK(r.complete());
    r = certificate_sweep(3);
    CHECK(r.presentations == 15226);
    CHECK(r.complete());
    CHECK(r.zero_sum > 0);
    CHECK(r.failures.empty());
  }

  TEST_CASE("census output is deterministic") {
    std::ostringstream a, b;
    write_census_csv(a, qhs_census(3));
    write_census_csv(b, qhs_census(3));
    CHECK(a.str() == b.str());
    const std::string csv = a.str();
    CHECK(csv.rfind("id,d,qhs,all_pure,verdict,certificate\n", 0) == 0);
    const auto records = qhs_census(3);
    CHECK(records.size() == 13);
    for (std::size_t i = 1; i < records.size(); ++i) CHECK(records[i - 1].id < records[i].id);
    for (const auto& rec : records) CHECK(rec.qhs);
  }

  TEST_CASE("census records") {
    const auto r = census_record(base_qhs(3));
    CHECK(r.qhs);
    CHECK(r.all_pure);
    CHECK(r.verdict == "finite:4");
    CHECK(r.certificate == "none");
    const auto s = census_record(Presentation(Alphabet(2), {Relation::zero({1, 1})}));
    CHECK_FALSE(s.qhs);
    CHECK(s.verdict == "infinite:certificate");
    CHECK(s.certificate == "se_pair:1:2");
  }
}
