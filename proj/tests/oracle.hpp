#pragma once

// Brute-force reference implementations. They share nothing with the engine
// beyond reading relation data off a Presentation.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "semiquad/presentation.hpp"

namespace oracle {

using W = std::vector<int>;

inline bool rtl_smaller(const W& a, const W& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

/// All n^m words, first letter varying fastest.
inline std::vector<W> words(int n, int m) {
  std::vector<W> out;
  W w(static_cast<std::size_t>(m), 1);
  while (true) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < w.size() && w[i] == n) w[i++] = 1;
    if (i == w.size()) break;
    ++w[i];
  }
  return out;
}

inline std::size_t encode(const W& w, int n) {
  std::size_t code = 0;
  for (std::size_t i = w.size(); i-- > 0;) code = code * static_cast<std::size_t>(n) + (w[i] - 1);
  return code;
}

struct Rel {
  bool zero;
  int a, b, c, d;
};

inline std::vector<Rel> relations(const semiquad::Presentation& p, bool without_top) {
  std::vector<Rel> out;
  for (const auto& r : p.relations()) {
    if (without_top && r.is_zero() && r.lead() == p.top_pair()) continue;
    out.push_back({r.is_zero(), r.lead().left, r.lead().right, r.tail().left, r.tail().right});
  }
  return out;
}

/// Classes of all n^m words under the equivalence generated by the binomial
/// relations, found with union-find.
struct Partition {
  int n = 0;
  std::vector<W> all;
  std::vector<std::size_t> class_of;  // per word
  std::vector<std::vector<std::size_t>> members;
  std::vector<bool> zero;
  std::vector<W> minimal;

  std::size_t nonzero_classes() const {
    return static_cast<std::size_t>(std::count(zero.begin(), zero.end(), false));
  }
};

inline Partition partition(const semiquad::Presentation& p, bool without_top, int m) {
  Partition out;
  out.n = p.n();
  out.all = words(p.n(), m);
  const auto rels = relations(p, without_top);
  std::vector<std::size_t> parent(out.all.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> word_zero(out.all.size(), false);
  for (std::size_t idx = 0; idx < out.all.size(); ++idx) {
    const W& w = out.all[idx];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      for (const Rel& r : rels) {
        if (w[i] != r.a || w[i + 1] != r.b) continue;
        if (r.zero) {
          word_zero[idx] = true;
          continue;
        }
        W v = w;
        v[i] = r.c;
        v[i + 1] = r.d;
        parent[find(idx)] = find(encode(v, p.n()));
      }
    }
  }
  std::map<std::size_t, std::size_t> root_to_class;
  out.class_of.resize(out.all.size());
  for (std::size_t idx = 0; idx < out.all.size(); ++idx) {
    auto [it, fresh] = root_to_class.emplace(find(idx), out.members.size());
    if (fresh) {
      out.members.emplace_back();
      out.zero.push_back(false);
      out.minimal.push_back(out.all[idx]);
    }
    const std::size_t c = it->second;
    out.class_of[idx] = c;
    out.members[c].push_back(idx);
    if (word_zero[idx]) out.zero[c] = true;
    if (rtl_smaller(out.all[idx], out.minimal[c])) out.minimal[c] = out.all[idx];
  }
  return out;
}

/// Minimal words of nonzero classes.
inline std::set<W> minimal_words(const Partition& part) {
  std::set<W> out;
  for (std::size_t c = 0; c < part.members.size(); ++c) {
    if (!part.zero[c]) out.insert(part.minimal[c]);
  }
  return out;
}

/// Minimal u is tame when a class member v has v[j] = n with v and u equal
/// after position j.
inline std::set<W> singular_words(const semiquad::Presentation& p, int m) {
  const Partition part = partition(p, true, m);
  std::set<W> out;
  for (std::size_t c = 0; c < part.members.size(); ++c) {
    if (part.zero[c]) continue;
    const W& u = part.minimal[c];
    bool tame = false;
    for (std::size_t idx : part.members[c]) {
      const W& v = part.all[idx];
      for (std::size_t j = 0; j < v.size() && !tame; ++j) {
        tame = v[j] == p.n() && std::equal(v.begin() + static_cast<long>(j) + 1, v.end(),
                                            u.begin() + static_cast<long>(j) + 1);
      }
      if (tame) break;
    }
    if (!tame) out.insert(u);
  }
  return out;
}

inline W to_w(const semiquad::Word& w) { return w.to_vector(); }

}  // namespace oracle
