#ifndef QGSPEC_MESH_HPP
#define QGSPEC_MESH_HPP

#include <functional>
#include <vector>

#include "qgspec/metric_graph.hpp"
#include "qgspec/potential.hpp"

namespace qgspec {

/// Uniform per-edge mesh on a metric graph. Edge e is split into
/// intervals[e] >= 2 equal intervals with nodes at i * ell_e / intervals[e].
class GraphMesh {
 public:
  GraphMesh(MetricGraph graph, std::vector<int> intervals);

  /// intervals[e] = max(2, ceil(ell_e / h)).
  static GraphMesh with_target_h(const MetricGraph& g, double h);

  const MetricGraph& graph() const { return graph_; }
  int intervals(int e) const { return intervals_[static_cast<size_t>(e)]; }
  const std::vector<int>& all_intervals() const { return intervals_; }
  double spacing(int e) const {
    return graph_.edge(e).length / static_cast<double>(intervals_[static_cast<size_t>(e)]);
  }
  double node_x(int e, int i) const {
    return graph_.edge(e).length * static_cast<double>(i) /
           static_cast<double>(intervals_[static_cast<size_t>(e)]);
  }
  double max_spacing() const;

  /// Dyadic refinement: every interval count doubled. The coarse node set is
  /// a subset of the fine one.
  GraphMesh refined() const;

  bool same_layout(const GraphMesh& other) const { return intervals_ == other.intervals_; }
  /// True when every interval count of this mesh divides the other's.
  bool refines_into(const GraphMesh& fine) const;

 private:
  MetricGraph graph_;
  std::vector<int> intervals_;
};

/// Piecewise-linear function on a GraphMesh, stored as per-edge node values.
/// Endpoint samples of edges meeting at a vertex agree, and the value at a
/// Dirichlet vertex is zero.
class MeshFunction {
 public:
  /// Validates vertex continuity and Dirichlet zeros (tolerance 1e-9 of the
  /// sup norm). Use the named constructors below when building functions.
  MeshFunction(GraphMesh mesh, std::vector<std::vector<double>> values);

  /// Samples fn(e, x) at every node, then overwrites endpoint nodes with
  /// vertex_values so continuity holds exactly.
  static MeshFunction sampled(const GraphMesh& mesh,
                              const std::function<double(int, double)>& fn,
                              const std::vector<double>& vertex_values);

  static MeshFunction zero(const GraphMesh& mesh);

  const GraphMesh& mesh() const { return mesh_; }
  const MetricGraph& graph() const { return mesh_.graph(); }
  const std::vector<std::vector<double>>& values() const { return values_; }
  double value(int e, int i) const {
    return values_[static_cast<size_t>(e)][static_cast<size_t>(i)];
  }
  double vertex_value(int v) const;

  double l2_norm_sq() const;
  double l2_norm() const;
  /// Integral of (f')^2 with f' the per-interval slope.
  double h1_seminorm_sq() const;
  double integral() const;
  double sup_norm() const;
  /// max |f(v)| over vertices.
  double sup_norm_vertices() const;

  MeshFunction& scale(double s);
  MeshFunction resampled_to(const GraphMesh& target) const;

 private:
  double endpoint_value_(const EdgeEnd& end) const;

  GraphMesh mesh_;
  std::vector<std::vector<double>> values_;
};

/// Exact L2 inner product of two piecewise-linear functions on one mesh.
double inner_l2(const MeshFunction& f, const MeshFunction& g);
/// Exact integral of f' g'.
double inner_h1_semi(const MeshFunction& f, const MeshFunction& g);
/// Per-element Simpson approximation of the integral of q f g.
double integral_q_fg(const Potential& q, const MeshFunction& f, const MeshFunction& g);

/// Quadratic-form value: integral of (f')^2 + q f^2 plus the coupling term
/// sum_v alpha_v f(v)^2. Requires finite couplings at vertices where f is
/// nonzero (a Dirichlet vertex contributes nothing since f vanishes there).
double form_value(const Potential& q, const MeshFunction& f);
double form_bilinear(const Potential& q, const MeshFunction& f, const MeshFunction& g);

/// Combines two functions on a common mesh (the finer of the two layouts if
/// one refines into the other). Throws if the meshes cannot be aligned.
MeshFunction linear_combination(double a, const MeshFunction& f, double b, const MeshFunction& g);

}  // namespace qgspec

#endif
