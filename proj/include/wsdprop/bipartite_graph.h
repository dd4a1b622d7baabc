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

#ifndef WSDPROP_BIPARTITE_GRAPH_H_
#define WSDPROP_BIPARTITE_GRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace wsdprop {

struct Edge {
  std::size_t right;
  int rank;
};

// Bipartite graph with left vertices 0..left_size-1 and right vertices
// 0..right_size-1. Every edge carries an integer rank (1 = best); plain
// graphs just use rank 1 everywhere.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(std::size_t left_size, std::size_t right_size)
      : right_size_(right_size), adjacency_(left_size) {}

  // Keeps each adjacency list sorted by right vertex; duplicate edges are
  // rejected with std::invalid_argument.
  void AddEdge(std::size_t left, std::size_t right, int rank = 1);

  std::size_t left_size() const { return adjacency_.size(); }
  std::size_t right_size() const { return right_size_; }
  std::size_t num_edges() const { return num_edges_; }
  int max_rank() const { return max_rank_; }

  std::span<const Edge> Neighbors(std::size_t left) const {
    return adjacency_.at(left);
  }
  bool HasEdge(std::size_t left, std::size_t right) const {
    return Rank(left, right).has_value();
  }
  std::optional<int> Rank(std::size_t left, std::size_t right) const;

 private:
  std::size_t right_size_ = 0;
  std::size_t num_edges_ = 0;
  int max_rank_ = 0;
  std::vector<std::vector<Edge>> adjacency_;
};

}  // namespace wsdprop

#endif  // WSDPROP_BIPARTITE_GRAPH_H_
