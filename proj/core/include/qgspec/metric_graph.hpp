#ifndef QGSPEC_METRIC_GRAPH_HPP
#define QGSPEC_METRIC_GRAPH_HPP

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace qgspec {

/// Coupling strength marking a Dirichlet vertex.
inline constexpr double kDirichlet = std::numeric_limits<double>::infinity();

struct Edge {
  int tail = 0;
  int head = 0;
  double length = 0.0;
};

/// Raw description of a metric graph, as read from a graph file or built in
/// code. Vertex i carries coupling strength vertex_alphas[i]; edges reference
/// vertices by index. Loops (tail == head) and parallel edges are allowed.
struct GraphSpec {
  std::vector<double> vertex_alphas;
  std::vector<Edge> edges;
};

/// One attachment of an edge at a vertex. side 0 is the tail end (x = 0),
/// side 1 is the head end (x = length). A loop contributes two entries at
/// its vertex.
struct EdgeEnd {
  int edge = 0;
  int side = 0;
};

/// Validated immutable metric multigraph with per-vertex delta couplings.
/// Safe to share across threads after construction.
class MetricGraph {
 public:
  /// Validates and builds. Throws std::invalid_argument on non-positive
  /// edge length, dangling endpoint index, or NaN coupling.
  static MetricGraph build(const GraphSpec& spec);

  int num_vertices() const { return static_cast<int>(alphas_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  double alpha(int v) const { return alphas_[static_cast<size_t>(v)]; }
  const std::vector<double>& alphas() const { return alphas_; }
  bool is_dirichlet(int v) const { return alphas_[static_cast<size_t>(v)] == kDirichlet; }

  /// Edge ends attached at vertex v, tail ends before head ends of the same
  /// edge, ordered by edge index.
  const std::vector<EdgeEnd>& incident(int v) const { return incident_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(incident_[static_cast<size_t>(v)].size()); }

  double total_length() const;

  /// Sum of the nonnegative coupling strengths over vertices with finite
  /// coupling (Dirichlet vertices do not contribute).
  double alpha_total() const;
  /// Sum of |alpha_v| over vertices with negative coupling.
  double alpha_negative_total() const;

  bool has_dirichlet_vertex() const;
  bool has_negative_coupling() const;
  /// True when every coupling is finite and >= 0.
  bool couplings_finite_nonneg() const;
  /// True when every coupling is finite and <= 0.
  bool couplings_finite_nonpos() const;

  GraphSpec to_spec() const { return GraphSpec{alphas_, edges_}; }

 private:
  MetricGraph(std::vector<double> alphas, std::vector<Edge> edges);

  std::vector<double> alphas_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeEnd>> incident_;
};

/// Combinatorial and metric invariants entering the bound formulas.
struct GraphInvariants {
  double total_length = 0.0;  // L
  int betti = 0;              // |E| - |V| + #components
  int pendants = 0;           // degree-1 vertices, a loop adding 2 to its vertex
  double ell_max = 0.0;
  double ell_min = 0.0;
  int longest_edge = 0;       // lowest index on ties
  int shortest_edge = 0;
  int edge_count = 0;
  int vertex_count = 0;
  int components = 0;
  bool connected = false;
  bool is_cycle = false;      // connected and every vertex of degree exactly 2
};

GraphInvariants graph_invariants(const MetricGraph& g);

}  // namespace qgspec

#endif
