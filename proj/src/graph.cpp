#include "thresh/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "thresh/errors.hpp"

namespace thresh {

NodeSet::NodeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

NodeSet::NodeSet(std::size_t universe, std::span<const NodeId> members) : NodeSet(universe) {
  for (NodeId v : members) insert(v);
}

NodeSet NodeSet::full(std::size_t universe) {
  NodeSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  s.size_ = universe;
  return s;
}

void NodeSet::insert(NodeId v) {
  if (v >= universe_) throw std::out_of_range("node id " + std::to_string(v) + " outside set universe");
  auto& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((w & bit) == 0) {
    w |= bit;
    ++size_;
  }
}

void NodeSet::erase(NodeId v) {
  if (v >= universe_) return;
  auto& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((w & bit) != 0) {
    w &= ~bit;
    --size_;
  }
}

std::vector<NodeId> NodeSet::members() const {
  std::vector<NodeId> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<NodeId>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool NodeSet::is_subset_of(const NodeSet& other) const {
  if (universe_ != other.universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<NodeId>::max()) throw PreconditionError("too many nodes");
  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") references a node >= n=" + std::to_string(n));
    }
    if (u == v) throw PreconditionError("self-loop at node " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  neighbors_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    neighbors_[cursor[u]++] = v;
    neighbors_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw PreconditionError("duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
    }
  }
  if (n > 0) {
    auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
    min_degree_ = *lo;
    max_degree_ = *hi;
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t degree_in(const Graph& g, NodeId v, const NodeSet& s) {
  if (v >= g.num_nodes()) throw std::out_of_range("node id " + std::to_string(v) + " >= n");
  std::size_t count = 0;
  for (NodeId u : g.neighbors(v)) count += s.contains(u) ? 1 : 0;
  return count;
}

std::uint64_t edge_boundary_count(const Graph& g, const NodeSet& a, const NodeSet& b) {
  std::uint64_t total = 0;
  for (NodeId v : a.members()) {
    if (v < g.num_nodes()) total += degree_in(g, v, b);
  }
  return total;
}

std::optional<std::vector<NodeId>> shortest_cycle(const Graph& g) {
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.num_nodes();
  std::size_t best = kUnseen;
  std::vector<NodeId> best_cycle;
  std::vector<std::size_t> dist(n, kUnseen);
  std::vector<NodeId> parent(n);
  std::vector<NodeId> touched;
  std::deque<NodeId> queue;

  auto path_to_root = [&](NodeId v) {
    std::vector<NodeId> path{v};
    while (dist[v] != 0) {
      v = parent[v];
      path.push_back(v);
    }
    return path;
  };

  // A BFS rooted at a node of a shortest cycle closes that cycle through a
  // non-tree edge; over all roots the minimum closing length is the girth.
  for (NodeId root = 0; root < n; ++root) {
    for (NodeId t : touched) dist[t] = kUnseen;
    touched.clear();
    queue.clear();
    dist[root] = 0;
    touched.push_back(root);
    queue.push_back(root);
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      if (2 * dist[u] + 1 >= best) break;
      for (NodeId w : g.neighbors(u)) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else if (dist[u] == 0 || parent[u] != w) {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (len < best) {
            auto left = path_to_root(u);
            auto right = path_to_root(w);
            // Both paths end at the root; the shortest closing edge gives
            // vertex-disjoint branches, so the root appears once.
            right.pop_back();
            best = len;
            best_cycle.assign(left.rbegin(), left.rend());
            best_cycle.insert(best_cycle.begin(), right.begin(), right.end());
          }
        }
      }
    }
  }
  if (best == kUnseen) return std::nullopt;
  return best_cycle;
}

std::optional<std::size_t> girth(const Graph& g) {
  auto cycle = shortest_cycle(g);
  if (!cycle) return std::nullopt;
  return cycle->size();
}

NodeSet bfs_ball(const Graph& g, NodeId source, std::size_t radius) {
  if (source >= g.num_nodes()) throw std::out_of_range("node id " + std::to_string(source) + " >= n");
  NodeSet ball(g.num_nodes());
  std::vector<NodeId> frontier{source};
  ball.insert(source);
  for (std::size_t depth = 0; depth < radius && !frontier.empty(); ++depth) {
    std::vector<NodeId> next;
    for (NodeId u : frontier) {
      for (NodeId w : g.neighbors(u)) {
        if (!ball.contains(w)) {
          ball.insert(w);
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

namespace {

// Next line that is neither blank nor a comment, with any trailing comment cut.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError("edge list: missing 'n m' header");
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (next_content_line(in, line, line_no)) {
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    if (!(row >> u >> v) || (row >> extra)) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (u < 0 || v >= n || u >= v) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": need 0 <= u < v < n");
    }
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("edge list: header says m=" + std::to_string(m) + " but found " +
                     std::to_string(edges.size()) + " edges");
  }
  try {
    return Graph(static_cast<std::size_t>(n), edges);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write graph file '" + path + "'");
  write_edge_list(out, g);
}

}  // namespace thresh
