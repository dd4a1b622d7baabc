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

#include "wsdprop/bipartite_graph.h"

#include <algorithm>
#include <stdexcept>

namespace wsdprop {

void BipartiteGraph::AddEdge(std::size_t left, std::size_t right, int rank) {
  if (left >= adjacency_.size() || right >= right_size_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  auto& adj = adjacency_[left];
  const auto pos = std::lower_bound(
      adj.begin(), adj.end(), right,
      [](const Edge& e, std::size_t r) { return e.right < r; });
  if (pos != adj.end() && pos->right == right) {
    throw std::invalid_argument("duplicate edge");
  }
  adj.insert(pos, Edge{right, rank});
  ++num_edges_;
  max_rank_ = std::max(max_rank_, rank);
}

std::optional<int> BipartiteGraph::Rank(std::size_t left,
                                        std::size_t right) const {
  const auto& adj = adjacency_.at(left);
  const auto pos = std::lower_bound(
      adj.begin(), adj.end(), right,
      [](const Edge& e, std::size_t r) { return e.right < r; });
  if (pos == adj.end() || pos->right != right) return std::nullopt;
  return pos->rank;
}

}  // namespace wsdprop
