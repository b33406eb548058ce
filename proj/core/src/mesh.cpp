#include "qgspec/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qgspec {

GraphMesh::GraphMesh(MetricGraph graph, std::vector<int> intervals)
    : graph_(std::move(graph)), intervals_(std::move(intervals)) {
  if (static_cast<int>(intervals_.size()) != graph_.num_edges())
    throw std::invalid_argument("mesh: interval counts must cover every edge");
  for (int n : intervals_)
    if (n < 2) throw std::invalid_argument("mesh: every edge needs at least 2 intervals");
}

GraphMesh GraphMesh::with_target_h(const MetricGraph& g, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("mesh: target spacing must be positive");
  std::vector<int> intervals(static_cast<size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) {
    intervals[static_cast<size_t>(e)] =
        std::max(2, static_cast<int>(std::ceil(g.edge(e).length / h)));
  }
  return GraphMesh(g, std::move(intervals));
}

double GraphMesh::max_spacing() const {
  double h = 0.0;
  for (int e = 0; e < graph_.num_edges(); ++e) h = std::max(h, spacing(e));
  return h;
}

GraphMesh GraphMesh::refined() const {
  std::vector<int> doubled(intervals_.size());
  for (size_t i = 0; i < intervals_.size(); ++i) doubled[i] = 2 * intervals_[i];
  return GraphMesh(graph_, std::move(doubled));
}

bool GraphMesh::refines_into(const GraphMesh& fine) const {
  if (intervals_.size() != fine.intervals_.size()) return false;
  for (size_t i = 0; i < intervals_.size(); ++i)
    if (fine.intervals_[i] % intervals_[i] != 0) return false;
  return true;
}

MeshFunction::MeshFunction(GraphMesh mesh, std::vector<std::vector<double>> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
  const MetricGraph& g = mesh_.graph();
  if (static_cast<int>(values_.size()) != g.num_edges())
    throw std::invalid_argument("mesh function: values must cover every edge");
  for (int e = 0; e < g.num_edges(); ++e)
    if (static_cast<int>(values_[static_cast<size_t>(e)].size()) != mesh_.intervals(e) + 1)
      throw std::invalid_argument("mesh function: wrong node count on edge " + std::to_string(e));

  double scale = 0.0;
  for (const auto& ev : values_)
    for (double v : ev) scale = std::max(scale, std::abs(v));
  const double tol = 1e-9 * std::max(1.0, scale);
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& ends = g.incident(v);
    double ref = endpoint_value_(ends.front());
    for (const EdgeEnd& end : ends)
      if (std::abs(endpoint_value_(end) - ref) > tol)
        throw std::invalid_argument("mesh function: discontinuous at vertex " + std::to_string(v));
    if (g.is_dirichlet(v) && std::abs(ref) > tol)
      throw std::invalid_argument("mesh function: nonzero at Dirichlet vertex " +
                                  std::to_string(v));
  }
}

double MeshFunction::endpoint_value_(const EdgeEnd& end) const {
  const auto& ev = values_[static_cast<size_t>(end.edge)];
  return end.side == 0 ? ev.front() : ev.back();
}

MeshFunction MeshFunction::sampled(const GraphMesh& mesh,
                                   const std::function<double(int, double)>& fn,
                                   const std::vector<double>& vertex_values) {
  const MetricGraph& g = mesh.graph();
  if (static_cast<int>(vertex_values.size()) != g.num_vertices())
    throw std::invalid_argument("mesh function: vertex values must cover every vertex");
  std::vector<std::vector<double>> values(static_cast<size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) {
    const int n = mesh.intervals(e);
    auto& ev = values[static_cast<size_t>(e)];
    ev.resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) ev[static_cast<size_t>(i)] = fn(e, mesh.node_x(e, i));
    ev.front() = vertex_values[static_cast<size_t>(g.edge(e).tail)];
    ev.back() = vertex_values[static_cast<size_t>(g.edge(e).head)];
  }
  return MeshFunction(mesh, std::move(values));
}

MeshFunction MeshFunction::zero(const GraphMesh& mesh) {
  std::vector<std::vector<double>> values(static_cast<size_t>(mesh.graph().num_edges()));
  for (int e = 0; e < mesh.graph().num_edges(); ++e)
    values[static_cast<size_t>(e)].assign(static_cast<size_t>(mesh.intervals(e)) + 1, 0.0);
  return MeshFunction(mesh, std::move(values));
}

double MeshFunction::vertex_value(int v) const {
  const EdgeEnd& end = graph().incident(v).front();
  const auto& ev = values_[static_cast<size_t>(end.edge)];
  return end.side == 0 ? ev.front() : ev.back();
}

double MeshFunction::l2_norm_sq() const { return inner_l2(*this, *this); }

double MeshFunction::l2_norm() const { return std::sqrt(l2_norm_sq()); }

double MeshFunction::h1_seminorm_sq() const { return inner_h1_semi(*this, *this); }

double MeshFunction::integral() const {
  double total = 0.0;
  for (int e = 0; e < graph().num_edges(); ++e) {
    const double h = mesh_.spacing(e);
    const auto& ev = values_[static_cast<size_t>(e)];
    double s = 0.5 * (ev.front() + ev.back());
    for (size_t i = 1; i + 1 < ev.size(); ++i) s += ev[i];
    total += s * h;
  }
  return total;
}

double MeshFunction::sup_norm() const {
  double sup = 0.0;
  for (const auto& ev : values_)
    for (double v : ev) sup = std::max(sup, std::abs(v));
  return sup;
}

double MeshFunction::sup_norm_vertices() const {
  double sup = 0.0;
  for (int v = 0; v < graph().num_vertices(); ++v) sup = std::max(sup, std::abs(vertex_value(v)));
  return sup;
}

MeshFunction& MeshFunction::scale(double s) {
  for (auto& ev : values_)
    for (double& v : ev) v *= s;
  return *this;
}

MeshFunction MeshFunction::resampled_to(const GraphMesh& target) const {
  if (mesh_.same_layout(target)) return MeshFunction(target, values_);
  std::vector<std::vector<double>> values(static_cast<size_t>(graph().num_edges()));
  for (int e = 0; e < graph().num_edges(); ++e) {
    const int n_src = mesh_.intervals(e);
    const int n_dst = target.intervals(e);
    const auto& src = values_[static_cast<size_t>(e)];
    auto& dst = values[static_cast<size_t>(e)];
    dst.resize(static_cast<size_t>(n_dst) + 1);
    for (int i = 0; i <= n_dst; ++i) {
      const double t = static_cast<double>(i) / n_dst * n_src;
      const int j = std::min(static_cast<int>(t), n_src - 1);
      const double frac = t - j;
      dst[static_cast<size_t>(i)] =
          src[static_cast<size_t>(j)] * (1.0 - frac) + src[static_cast<size_t>(j) + 1] * frac;
    }
  }
  return MeshFunction(target, std::move(values));
}

double inner_l2(const MeshFunction& f, const MeshFunction& g) {
  if (!f.mesh().same_layout(g.mesh()))
    throw std::invalid_argument("inner_l2: functions live on different meshes");
  double total = 0.0;
  for (int e = 0; e < f.graph().num_edges(); ++e) {
    const double h = f.mesh().spacing(e);
    const auto& fe = f.values()[static_cast<size_t>(e)];
    const auto& ge = g.values()[static_cast<size_t>(e)];
    // Exact for linear elements: int over one interval of product of two
    // linear functions = h/6 (2 fa ga + fa gb + fb ga + 2 fb gb).
    double s = 0.0;
    for (size_t i = 0; i + 1 < fe.size(); ++i) {
      s += 2.0 * fe[i] * ge[i] + fe[i] * ge[i + 1] + fe[i + 1] * ge[i] +
           2.0 * fe[i + 1] * ge[i + 1];
    }
    total += s * h / 6.0;
  }
  return total;
}

double inner_h1_semi(const MeshFunction& f, const MeshFunction& g) {
  if (!f.mesh().same_layout(g.mesh()))
    throw std::invalid_argument("inner_h1_semi: functions live on different meshes");
  double total = 0.0;
  for (int e = 0; e < f.graph().num_edges(); ++e) {
    const double h = f.mesh().spacing(e);
    const auto& fe = f.values()[static_cast<size_t>(e)];
    const auto& ge = g.values()[static_cast<size_t>(e)];
    double s = 0.0;
    for (size_t i = 0; i + 1 < fe.size(); ++i)
      s += (fe[i + 1] - fe[i]) * (ge[i + 1] - ge[i]);
    total += s / h;
  }
  return total;
}

double integral_q_fg(const Potential& q, const MeshFunction& f, const MeshFunction& g) {
  if (!f.mesh().same_layout(g.mesh()))
    throw std::invalid_argument("integral_q_fg: functions live on different meshes");
  if (q.num_edges() != f.graph().num_edges())
    throw std::invalid_argument("integral_q_fg: potential does not match the graph");
  double total = 0.0;
  for (int e = 0; e < f.graph().num_edges(); ++e) {
    const double h = f.mesh().spacing(e);
    const auto& fe = f.values()[static_cast<size_t>(e)];
    const auto& ge = g.values()[static_cast<size_t>(e)];
    double s = 0.0;
    for (size_t i = 0; i + 1 < fe.size(); ++i) {
      const double xa = f.mesh().node_x(e, static_cast<int>(i));
      const double xb = f.mesh().node_x(e, static_cast<int>(i) + 1);
      const double qa = q.eval(e, xa);
      const double qm = q.eval(e, 0.5 * (xa + xb));
      const double qb = q.eval(e, xb);
      const double fm = 0.5 * (fe[i] + fe[i + 1]);
      const double gm = 0.5 * (ge[i] + ge[i + 1]);
      s += (qa * fe[i] * ge[i] + 4.0 * qm * fm * gm + qb * fe[i + 1] * ge[i + 1]) / 6.0;
    }
    total += s * h;
  }
  return total;
}

double form_bilinear(const Potential& q, const MeshFunction& f, const MeshFunction& g) {
  double value = inner_h1_semi(f, g) + integral_q_fg(q, f, g);
  const MetricGraph& graph = f.graph();
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const double a = graph.alpha(v);
    if (a == kDirichlet) continue;  // both functions vanish there
    value += a * f.vertex_value(v) * g.vertex_value(v);
  }
  return value;
}

double form_value(const Potential& q, const MeshFunction& f) { return form_bilinear(q, f, f); }

MeshFunction linear_combination(double a, const MeshFunction& f, double b,
                                const MeshFunction& g) {
  const MeshFunction* fine = &f;
  const MeshFunction* coarse = &g;
  double fine_w = a;
  double coarse_w = b;
  if (!f.mesh().same_layout(g.mesh())) {
    if (g.mesh().refines_into(f.mesh())) {
      // keep as assigned
    } else if (f.mesh().refines_into(g.mesh())) {
      std::swap(fine, coarse);
      std::swap(fine_w, coarse_w);
    } else {
      throw std::invalid_argument("linear_combination: unresolvable mesh mismatch");
    }
  }
  MeshFunction resampled = coarse->resampled_to(fine->mesh());
  std::vector<std::vector<double>> values = fine->values();
  for (size_t e = 0; e < values.size(); ++e)
    for (size_t i = 0; i < values[e].size(); ++i)
      values[e][i] = fine_w * values[e][i] + coarse_w * resampled.values()[e][i];
  return MeshFunction(fine->mesh(), std::move(values));
}

}  // namespace qgspec
