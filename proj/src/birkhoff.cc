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

#include "wsdprop/birkhoff.h"

#include <iterator>
#include <string>

#include "wsdprop/bipartite_graph.h"
#include "wsdprop/errors.h"
#include "wsdprop/matching.h"

namespace wsdprop {

DoublyStochasticMatrix::DoublyStochasticMatrix(std::vector<Row> rows)
    : rows_(std::move(rows)) {
  const std::size_t p = rows_.size();
  std::vector<Rational> col_sum(p);
  for (std::size_t i = 0; i < p; ++i) {
    Rational row_sum;
    for (auto it = rows_[i].begin(); it != rows_[i].end();) {
      const auto& [j, x] = *it;
      if (j >= p) {
        throw NotDoublyStochastic("column index " + std::to_string(j) +
                                  " outside a " + std::to_string(p) +
                                  "x" + std::to_string(p) + " matrix");
      }
      if (x.Sign() < 0 || x > Rational(1)) {
        throw NotDoublyStochastic("entry (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") = " + x.ToString() +
                                  " outside [0,1]");
      }
      row_sum += x;
      col_sum[j] += x;
      it = x.IsZero() ? rows_[i].erase(it) : std::next(it);
    }
    if (row_sum != Rational(1)) {
      throw NotDoublyStochastic("row " + std::to_string(i) + " sums to " +
                                row_sum.ToString());
    }
  }
  for (std::size_t j = 0; j < p; ++j) {
    if (col_sum[j] != Rational(1)) {
      throw NotDoublyStochastic("column " + std::to_string(j) + " sums to " +
                                col_sum[j].ToString());
    }
  }
}

DoublyStochasticMatrix DoublyStochasticMatrix::FromDense(
    const std::vector<std::vector<Rational>>& dense) {
  std::vector<Row> rows(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].size() != dense.size()) {
      throw NotDoublyStochastic("matrix is not square");
    }
    for (std::size_t j = 0; j < dense[i].size(); ++j) {
      if (!dense[i][j].IsZero()) rows[i].emplace(j, dense[i][j]);
      if (dense[i][j].Sign() < 0) {
        throw NotDoublyStochastic("negative entry");
      }
    }
  }
  return DoublyStochasticMatrix(std::move(rows));
}

Rational DoublyStochasticMatrix::at(std::size_t row, std::size_t col) const {
  const auto it = rows_.at(row).find(col);
  return it == rows_[row].end() ? Rational() : it->second;
}

std::size_t DoublyStochasticMatrix::num_nonzeros() const {
  std::size_t nnz = 0;
  for (const Row& r : rows_) nnz += r.size();
  return nnz;
}

std::vector<PermutationTerm> BvnDecompose(const DoublyStochasticMatrix& matrix) {
  const std::size_t p = matrix.size();
  if (p == 0) return {{Rational(1), {}}};

  std::vector<DoublyStochasticMatrix::Row> rest = matrix.rows();
  std::vector<PermutationTerm> terms;
  Matching previous(p, p);
  Rational remaining(1);
  while (remaining.Sign() > 0) {
    BipartiteGraph support(p, p);
    for (std::size_t i = 0; i < p; ++i) {
      for (const auto& [j, x] : rest[i]) support.AddEdge(i, j);
    }
    // Pairs that survived the last subtraction remain a valid seed.
    Matching seed(p, p);
    for (const auto& [i, j] : previous.Pairs()) {
      if (rest[i].count(j)) seed.Match(i, j);
    }
    const Matching pm = MaxMatching(support, std::move(seed));
    if (!pm.IsPerfect()) {
      throw InternalError("support of a scaled doubly stochastic matrix "
                          "has no perfect matching");
    }
    PermutationTerm term;
    term.permutation.resize(p);
    term.weight = remaining;
    for (std::size_t i = 0; i < p; ++i) {
      term.permutation[i] = pm.MateOfLeft(i);
      term.weight = Min(term.weight, rest[i].at(term.permutation[i]));
    }
    for (std::size_t i = 0; i < p; ++i) {
      auto it = rest[i].find(term.permutation[i]);
      it->second -= term.weight;
      if (it->second.IsZero()) rest[i].erase(it);
    }
    remaining -= term.weight;
    terms.push_back(std::move(term));
    previous = pm;
  }
  for (const auto& r : rest) {
    if (!r.empty()) throw InternalError("decomposition left a residue");
  }
  return terms;
}

}  // namespace wsdprop
