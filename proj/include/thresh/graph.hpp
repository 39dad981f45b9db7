#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace thresh {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Dense membership set over the node ids 0..universe-1.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe);
  NodeSet(std::size_t universe, std::span<const NodeId> members);

  static NodeSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(NodeId v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(NodeId v);
  void erase(NodeId v);

  std::vector<NodeId> members() const;
  bool is_subset_of(const NodeSet& other) const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const NodeSet& a, const NodeSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Immutable undirected simple graph in compressed adjacency form. Neighbor
// lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Throws PreconditionError on self-loops, duplicate edges or ids >= n.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  bool has_edge(NodeId u, NodeId v) const;

  std::size_t min_degree() const { return min_degree_; }
  std::size_t max_degree() const { return max_degree_; }
  bool is_regular() const { return min_degree_ == max_degree_; }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::size_t min_degree_ = 0;
  std::size_t max_degree_ = 0;
};

// d_S(v): number of neighbors of v inside s. Throws std::out_of_range for v >= n.
std::size_t degree_in(const Graph& g, NodeId v, const NodeSet& s);

// e(A, B): ordered pairs (v, u) with v in a, u in b and {v, u} an edge. Edges
// inside a ∩ b are counted once in each direction.
std::uint64_t edge_boundary_count(const Graph& g, const NodeSet& a, const NodeSet& b);

// Node sequence of one shortest cycle, or nullopt for a forest.
std::optional<std::vector<NodeId>> shortest_cycle(const Graph& g);

// Length of the shortest cycle, or nullopt ("acyclic") for a forest.
std::optional<std::size_t> girth(const Graph& g);

// Node ids within BFS distance `radius` of `source`.
NodeSet bfs_ball(const Graph& g, NodeId source, std::size_t radius);

// Edge-list text format: "n m" header then one "u v" line per edge with
// u < v. Blank lines and '#' comments are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

}  // namespace thresh
