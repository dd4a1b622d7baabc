// Copyright 2026 The wsdprop Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WSDPROP_TESTS_ORACLES_H_
#define WSDPROP_TESTS_ORACLES_H_

// Brute-force reference implementations and fixtures shared by the tests.
// Nothing here calls the solvers under test.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wsdprop/bipartite_graph.h"
#include "wsdprop/instance.h"
#include "wsdprop/rational.h"

namespace wsdprop::oracle {

inline RawInstance MakeRaw(ItemKind kind, std::size_t m,
                           const std::vector<std::string>& alphas,
                           const std::vector<std::vector<std::size_t>>& rankings) {
  RawInstance raw;
  raw.kind = kind;
  for (std::size_t j = 0; j < m; ++j) raw.items.push_back("b" + std::to_string(j + 1));
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    RawAgent a;
    a.name = "a" + std::to_string(i + 1);
    a.entitlement = Rational::Parse(alphas[i]);
    // Rankings are given as 1-based item numbers.
    for (std::size_t b : rankings.at(i)) a.ranking.push_back("b" + std::to_string(b));
    raw.agents.push_back(std::move(a));
  }
  return raw;
}

inline std::vector<std::size_t> Identity(std::size_t m) {
  std::vector<std::size_t> r(m);
  for (std::size_t j = 0; j < m; ++j) r[j] = j + 1;
  return r;
}

// n agents, all ranking b1, b2, ..., bm.
inline Instance Uniform(ItemKind kind, std::size_t m,
                        const std::vector<std::string>& alphas) {
  return ValidateInstance(MakeRaw(
      kind, m, alphas,
      std::vector<std::vector<std::size_t>>(alphas.size(), Identity(m))));
}

// HalfHalf: two agents with entitlement 1/2, three chores, identical rankings.
inline Instance HalfHalfChores() { return Uniform(ItemKind::kChores, 3, {"1/2", "1/2"}); }

inline std::vector<std::size_t> Bundle(std::initializer_list<std::size_t> items1) {
  std::vector<std::size_t> out;
  for (std::size_t b : items1) out.push_back(b - 1);
  return out;
}

// Size of a maximum matching by exhaustive search.
inline std::size_t BruteMaxMatching(const BipartiteGraph& g) {
  std::vector<char> used(g.right_size(), 0);
  std::function<std::size_t(std::size_t)> go = [&](std::size_t l) -> std::size_t {
    if (l == g.left_size()) return 0;
    std::size_t best = go(l + 1);
    for (const Edge& e : g.Neighbors(l)) {
      if (used[e.right]) continue;
      used[e.right] = 1;
      best = std::max(best, 1 + go(l + 1));
      used[e.right] = 0;
    }
    return best;
  };
  return go(0);
}

// Every matching saturating the left side, as left -> right vectors.
inline std::vector<std::vector<std::size_t>> AllLeftPerfect(const BipartiteGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> mate(g.left_size());
  std::vector<char> used(g.right_size(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t l) {
    if (l == g.left_size()) {
      out.push_back(mate);
      return;
    }
    for (const Edge& e : g.Neighbors(l)) {
      if (used[e.right]) continue;
      used[e.right] = 1;
      mate[l] = e.right;
      go(l + 1);
      used[e.right] = 0;
    }
  };
  go(0);
  return out;
}

// counts[r-1] = number of pairs of rank r, with ranks looked up by scanning.
inline std::vector<std::int64_t> SignatureOf(const BipartiteGraph& g,
                                             const std::vector<std::size_t>& mate) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(g.max_rank()), 0);
  for (std::size_t l = 0; l < mate.size(); ++l) {
    for (const Edge& e : g.Neighbors(l)) {
      if (e.right == mate[l]) ++counts[static_cast<std::size_t>(e.rank - 1)];
    }
  }
  return counts;
}

// Left: a1..a4, right: b1..b4. a1: b2 > b1, a2: b1 > b2, a3: b4 > b3,
// a4: b2 > b4; the preferred edge has rank 1, the other rank 2.
inline BipartiteGraph FourSlotRankTwoGraph() {
  BipartiteGraph g(4, 4);
  g.AddEdge(0, 1, 1);
  g.AddEdge(0, 0, 2);
  g.AddEdge(1, 0, 1);
  g.AddEdge(1, 1, 2);
  g.AddEdge(2, 3, 1);
  g.AddEdge(2, 2, 2);
  g.AddEdge(3, 1, 1);
  g.AddEdge(3, 3, 2);
  return g;
}

inline BipartiteGraph RandomGraph(std::mt19937_64& rng, std::size_t left,
                                  std::size_t right, double density,
                                  int max_rank) {
  BipartiteGraph g(left, right);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> rank(1, max_rank);
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t r = 0; r < right; ++r) {
      if (keep(rng)) g.AddEdge(l, r, rank(rng));
    }
  }
  return g;
}

// All ways to write 1 as an ordered sum of n multiples of 1/6.
inline std::vector<std::vector<std::string>> SixthsGrid(std::size_t n) {
  std::vector<std::vector<std::string>> out;
  std::vector<int> parts(n);
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      if (left < 1) return;
      parts[i] = left;
      std::vector<std::string> alphas;
      for (int p : parts) alphas.push_back(Rational(p, 6).ToString());
      out.push_back(alphas);
      return;
    }
    for (int p = 1; p < left; ++p) {
      parts[i] = p;
      go(i + 1, left - p);
    }
  };
  go(0, 6);
  return out;
}

// Owner vectors for all n^m complete allocations, lexicographic.
inline std::vector<std::vector<std::size_t>> AllOwnerVectors(std::size_t n,
                                                             std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> owner(m, 0);
  std::function<void(std::size_t)> go = [&](std::size_t j) {
    if (j == m) {
      out.push_back(owner);
      return;
    }
    for (std::size_t a = 0; a < n; ++a) {
      owner[j] = a;
      go(j + 1);
    }
  };
  go(0);
  return out;
}

inline Rational RandomRational(std::mt19937_64& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(0, max_num), den(1, max_den);
  return Rational(num(rng), den(rng));
}

}  // namespace wsdprop::oracle

#endif  // WSDPROP_TESTS_ORACLES_H_
