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

#ifndef WSDPROP_ASSIGNMENT_H_
#define WSDPROP_ASSIGNMENT_H_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "wsdprop/bipartite_graph.h"
#include "wsdprop/errors.h"
#include "wsdprop/matching.h"

namespace wsdprop {

// Integer vector under componentwise addition and lexicographic order. Used
// as an assignment cost so that "maximize rank-1 edges, then rank-2, ..." is
// a single minimization without exponentially large scalar weights.
class LexCost {
 public:
  LexCost() = default;
  explicit LexCost(std::size_t dim) : v_(dim, 0) {}

  static LexCost Unit(std::size_t dim, std::size_t index,
                      std::int64_t value = 1) {
    LexCost c(dim);
    c.v_.at(index) = value;
    return c;
  }

  // Overwrites with value * e_index (index < dim) or, for index >= dim, zero.
  void SetUnit(std::size_t index, std::int64_t value) {
    std::fill(v_.begin(), v_.end(), 0);
    if (index < v_.size()) v_[index] = value;
  }

  std::size_t dim() const { return v_.size(); }
  std::int64_t operator[](std::size_t i) const { return v_[i]; }
  const std::vector<std::int64_t>& values() const { return v_; }

  // In place, so that solver temporaries keep their storage.
  LexCost& operator+=(const LexCost& o) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  LexCost& operator-=(const LexCost& o) {
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  friend LexCost operator+(LexCost a, const LexCost& b) { return a += b; }
  friend LexCost operator-(LexCost a, const LexCost& b) { return a -= b; }

  friend bool operator==(const LexCost&, const LexCost&) = default;
  friend std::strong_ordering operator<=>(const LexCost& a, const LexCost& b) {
    return a.v_ <=> b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const LexCost& c) {
    os << '<';
    for (std::size_t i = 0; i < c.v_.size(); ++i) {
      os << (i ? "," : "") << c.v_[i];
    }
    return os << '>';
  }

 private:
  std::vector<std::int64_t> v_;
};

template <typename Cost>
struct Assignment {
  Matching matching;
  Cost total;
};

// Minimum-cost matching saturating every left vertex (a perfect matching
// when the sides are equal), by the shortest-augmenting-path Hungarian
// method. Only edges of `graph` are admissible.
//
// `Cost` must form an ordered abelian group: copy, +=, -=, <. `zero` fixes
// the identity (and, for LexCost, the dimension). `cost(left, edge, out)`
// writes the cost of `edge` leaving `left` into `out`.
//
// Ties are broken towards lower right-vertex indices. Throws
// NoPerfectMatching when the left side cannot be saturated.
template <typename Cost, typename CostFn>
Assignment<Cost> AssignmentMinCost(const BipartiteGraph& graph, CostFn&& cost,
                                   const Cost& zero) {
  const std::size_t n = graph.left_size();
  const std::size_t m = graph.right_size();
  if (n > m) {
    throw NoPerfectMatching("more left vertices than right vertices");
  }
  // 1-based potentials; column 0 is the virtual root of each search tree.
  std::vector<Cost> u(n + 1, zero), v(m + 1, zero), minv(m + 1, zero);
  std::vector<char> unreached(m + 1), used(m + 1);
  std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
  Cost cur = zero;
  Cost delta = zero;

  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(unreached.begin(), unreached.end(), 1);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      for (const Edge& e : graph.Neighbors(i0 - 1)) {
        const std::size_t j = e.right + 1;
        if (used[j]) continue;
        cost(i0 - 1, e, cur);
        cur -= u[i0];
        cur -= v[j];
        if (unreached[j] || cur < minv[j]) {
          minv[j] = cur;
          unreached[j] = 0;
          way[j] = j0;
        }
      }
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j] || unreached[j]) continue;
        if (j1 == 0 || minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 == 0) {
        throw NoPerfectMatching("no matching saturates left vertex " +
                                std::to_string(i - 1));
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else if (!unreached[j]) {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment<Cost> result{Matching(n, m), zero};
  for (std::size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) result.matching.Match(p[j] - 1, j - 1);
  }
  for (std::size_t l = 0; l < n; ++l) {
    const std::size_t r = result.matching.MateOfLeft(l);
    for (const Edge& e : graph.Neighbors(l)) {
      if (e.right == r) {
        cost(l, e, cur);
        result.total += cur;
        break;
      }
    }
  }
  return result;
}

}  // namespace wsdprop

#endif  // WSDPROP_ASSIGNMENT_H_
