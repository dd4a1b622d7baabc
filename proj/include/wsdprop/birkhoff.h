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

#ifndef WSDPROP_BIRKHOFF_H_
#define WSDPROP_BIRKHOFF_H_

#include <cstddef>
#include <map>
#include <vector>

#include "wsdprop/rational.h"

namespace wsdprop {

// Square matrix with entries in [0, 1] whose rows and columns each sum to
// exactly one. Stored by row, zero entries omitted.
class DoublyStochasticMatrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  // Throws NotDoublyStochastic.
  explicit DoublyStochasticMatrix(std::vector<Row> rows);
  static DoublyStochasticMatrix FromDense(
      const std::vector<std::vector<Rational>>& dense);

  std::size_t size() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  Rational at(std::size_t row, std::size_t col) const;
  std::size_t num_nonzeros() const;

 private:
  std::vector<Row> rows_;
};

struct PermutationTerm {
  Rational weight;
  // permutation[row] = column of the single one in that row.
  std::vector<std::size_t> permutation;
};

// Writes the matrix as sum_k weight_k * P_k with positive weights summing to
// one and every P_k supported on the matrix's nonzero pattern. Each round
// takes a perfect matching of the current support, subtracts its smallest
// entry along it, and zeroes at least one entry, so there are at most
// nnz - size + 1 rounds. The empty matrix gives one empty term of weight 1.
std::vector<PermutationTerm> BvnDecompose(const DoublyStochasticMatrix& matrix);

}  // namespace wsdprop

#endif  // WSDPROP_BIRKHOFF_H_
