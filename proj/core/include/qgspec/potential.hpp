#ifndef QGSPEC_POTENTIAL_HPP
#define QGSPEC_POTENTIAL_HPP

#include <vector>

#include "qgspec/metric_graph.hpp"

namespace qgspec {

enum class PotentialKind { Constant, Poly, Samples };

/// Real potential q on a metric graph, one representation per edge:
/// a constant value, polynomial coefficients in the edge coordinate
/// x in [0, ell_e], or >= 2 uniform samples read by linear interpolation.
/// Immutable after construction; all operations are pure.
class Potential {
 public:
  static Potential zero(const MetricGraph& g);
  static Potential constant(const MetricGraph& g, double value);
  /// One constant per edge.
  static Potential constant(const MetricGraph& g, std::vector<double> per_edge);
  /// coeffs[e] = {a0, a1, ...} meaning a0 + a1 x + a2 x^2 + ... on edge e.
  static Potential poly(const MetricGraph& g, std::vector<std::vector<double>> coeffs);
  /// samples[e] holds >= 2 uniform samples over [0, ell_e].
  static Potential samples(const MetricGraph& g, std::vector<std::vector<double>> samples);

  PotentialKind kind() const { return kind_; }
  int num_edges() const { return static_cast<int>(lengths_.size()); }
  double edge_length(int e) const { return lengths_[static_cast<size_t>(e)]; }
  const std::vector<std::vector<double>>& data() const { return data_; }

  /// Pointwise value at coordinate x in [0, ell_e]. Throws std::out_of_range
  /// for x outside the edge interval.
  double eval(int e, double x) const;

  bool is_identically_zero() const;

 private:
  Potential(PotentialKind kind, std::vector<double> lengths, std::vector<std::vector<double>> data);

  PotentialKind kind_;
  std::vector<double> lengths_;
  std::vector<std::vector<double>> data_;  // constant: one entry per edge
};

/// Pointwise value of q on edge e. Sampled representations use linear
/// interpolation.
double eval_potential(const Potential& q, int e, double x);

/// ( sum_e int_e max(q,0)^p dx )^(1/p) for finite p, and the grid supremum
/// of max(q,0) for p = inf. Throws std::invalid_argument for p < 1.
double lp_norm_positive_part(const Potential& q, double p);

/// Signed integral of q over the whole graph.
double integrate_potential(const Potential& q);

}  // namespace qgspec

#endif
