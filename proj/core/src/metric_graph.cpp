#include "qgspec/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qgspec {

MetricGraph MetricGraph::build(const GraphSpec& spec) {
  const int nv = static_cast<int>(spec.vertex_alphas.size());
  if (nv == 0) throw std::invalid_argument("graph has no vertices");
  if (spec.edges.empty()) throw std::invalid_argument("graph has no edges");

  for (int v = 0; v < nv; ++v) {
    const double a = spec.vertex_alphas[static_cast<size_t>(v)];
    if (std::isnan(a))
      throw std::invalid_argument("vertex " + std::to_string(v) + ": NaN coupling");
    if (a == -kDirichlet)
      throw std::invalid_argument("vertex " + std::to_string(v) + ": coupling -inf is not allowed");
  }
  for (size_t i = 0; i < spec.edges.size(); ++i) {
    const Edge& e = spec.edges[i];
    if (!(e.length > 0.0) || !std::isfinite(e.length))
      throw std::invalid_argument("edge " + std::to_string(i) + ": non-positive length");
    if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv)
      throw std::invalid_argument("edge " + std::to_string(i) + ": dangling endpoint index");
  }
  return MetricGraph(spec.vertex_alphas, spec.edges);
}

MetricGraph::MetricGraph(std::vector<double> alphas, std::vector<Edge> edges)
    : alphas_(std::move(alphas)), edges_(std::move(edges)) {
  incident_.resize(alphas_.size());
  for (int e = 0; e < num_edges(); ++e) {
    incident_[static_cast<size_t>(edges_[static_cast<size_t>(e)].tail)].push_back(EdgeEnd{e, 0});
    incident_[static_cast<size_t>(edges_[static_cast<size_t>(e)].head)].push_back(EdgeEnd{e, 1});
  }
  for (auto& ends : incident_) {
    std::stable_sort(ends.begin(), ends.end(), [](const EdgeEnd& a, const EdgeEnd& b) {
      return a.edge != b.edge ? a.edge < b.edge : a.side < b.side;
    });
  }
}

double MetricGraph::total_length() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.length;
  return s;
}

double MetricGraph::alpha_total() const {
  double s = 0.0;
  for (double a : alphas_)
    if (std::isfinite(a) && a > 0.0) s += a;
  return s;
}

double MetricGraph::alpha_negative_total() const {
  double s = 0.0;
  for (double a : alphas_)
    if (a < 0.0) s -= a;
  return s;
}

bool MetricGraph::has_dirichlet_vertex() const {
  return std::any_of(alphas_.begin(), alphas_.end(), [](double a) { return a == kDirichlet; });
}

bool MetricGraph::has_negative_coupling() const {
  return std::any_of(alphas_.begin(), alphas_.end(), [](double a) { return a < 0.0; });
}

bool MetricGraph::couplings_finite_nonneg() const {
  return std::all_of(alphas_.begin(), alphas_.end(),
                     [](double a) { return std::isfinite(a) && a >= 0.0; });
}

bool MetricGraph::couplings_finite_nonpos() const {
  return std::all_of(alphas_.begin(), alphas_.end(),
                     [](double a) { return std::isfinite(a) && a <= 0.0; });
}

namespace {

// Union-find over vertex indices.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

GraphInvariants graph_invariants(const MetricGraph& g) {
  GraphInvariants inv;
  inv.edge_count = g.num_edges();
  inv.vertex_count = g.num_vertices();

  inv.ell_max = -1.0;
  inv.ell_min = std::numeric_limits<double>::infinity();
  for (int e = 0; e < g.num_edges(); ++e) {
    const double len = g.edge(e).length;
    inv.total_length += len;
    if (len > inv.ell_max) {
      inv.ell_max = len;
      inv.longest_edge = e;
    }
    if (len < inv.ell_min) {
      inv.ell_min = len;
      inv.shortest_edge = e;
    }
  }

  DisjointSets ds(g.num_vertices());
  for (const Edge& e : g.edges()) ds.unite(e.tail, e.head);
  int components = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (ds.find(v) == v) ++components;
  inv.components = components;
  inv.connected = components == 1;
  inv.betti = g.num_edges() - g.num_vertices() + components;

  bool all_degree_two = true;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int d = g.degree(v);
    if (d == 1) ++inv.pendants;
    if (d != 2) all_degree_two = false;
  }
  inv.is_cycle = inv.connected && all_degree_two;
  return inv;
}

}  // namespace qgspec
