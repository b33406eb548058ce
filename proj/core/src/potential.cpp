#include "qgspec/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qgspec/quadrature.hpp"

namespace qgspec {

namespace {

std::vector<double> edge_lengths(const MetricGraph& g) {
  std::vector<double> lengths(static_cast<size_t>(g.num_edges()));
  for (int e = 0; e < g.num_edges(); ++e) lengths[static_cast<size_t>(e)] = g.edge(e).length;
  return lengths;
}

void check_finite(const std::vector<std::vector<double>>& data) {
  for (size_t e = 0; e < data.size(); ++e)
    for (double v : data[e])
      if (!std::isfinite(v))
        throw std::invalid_argument("potential: non-finite value on edge " + std::to_string(e));
}

}  // namespace

Potential::Potential(PotentialKind kind, std::vector<double> lengths,
                     std::vector<std::vector<double>> data)
    : kind_(kind), lengths_(std::move(lengths)), data_(std::move(data)) {
  if (data_.size() != lengths_.size())
    throw std::invalid_argument("potential: representation must cover every edge");
  check_finite(data_);
  if (kind_ == PotentialKind::Samples) {
    for (size_t e = 0; e < data_.size(); ++e)
      if (data_[e].size() < 2)
        throw std::invalid_argument("potential: edge " + std::to_string(e) +
                                    " needs at least 2 samples");
  }
  if (kind_ == PotentialKind::Poly) {
    for (size_t e = 0; e < data_.size(); ++e)
      if (data_[e].empty())
        throw std::invalid_argument("potential: edge " + std::to_string(e) +
                                    " has empty coefficient list");
  }
}

Potential Potential::zero(const MetricGraph& g) { return constant(g, 0.0); }

Potential Potential::constant(const MetricGraph& g, double value) {
  std::vector<std::vector<double>> data(static_cast<size_t>(g.num_edges()), {value});
  return Potential(PotentialKind::Constant, edge_lengths(g), std::move(data));
}

Potential Potential::constant(const MetricGraph& g, std::vector<double> per_edge) {
  if (static_cast<int>(per_edge.size()) != g.num_edges())
    throw std::invalid_argument("potential: expected one constant per edge");
  std::vector<std::vector<double>> data;
  data.reserve(per_edge.size());
  for (double v : per_edge) data.push_back({v});
  return Potential(PotentialKind::Constant, edge_lengths(g), std::move(data));
}

Potential Potential::poly(const MetricGraph& g, std::vector<std::vector<double>> coeffs) {
  if (static_cast<int>(coeffs.size()) != g.num_edges())
    throw std::invalid_argument("potential: expected coefficients for every edge");
  return Potential(PotentialKind::Poly, edge_lengths(g), std::move(coeffs));
}

Potential Potential::samples(const MetricGraph& g, std::vector<std::vector<double>> samples) {
  if (static_cast<int>(samples.size()) != g.num_edges())
    throw std::invalid_argument("potential: expected samples for every edge");
  return Potential(PotentialKind::Samples, edge_lengths(g), std::move(samples));
}

double Potential::eval(int e, double x) const {
  const double len = lengths_[static_cast<size_t>(e)];
  const double slack = 1e-12 * std::max(1.0, len);
  if (x < -slack || x > len + slack)
    throw std::out_of_range("potential: coordinate outside edge interval");
  x = std::clamp(x, 0.0, len);

  const std::vector<double>& d = data_[static_cast<size_t>(e)];
  switch (kind_) {
    case PotentialKind::Constant:
      return d[0];
    case PotentialKind::Poly: {
      double v = 0.0;
      for (size_t i = d.size(); i-- > 0;) v = v * x + d[i];
      return v;
    }
    case PotentialKind::Samples: {
      const size_t n = d.size() - 1;  // number of sample intervals
      const double t = x / len * static_cast<double>(n);
      const size_t i = std::min(static_cast<size_t>(t), n - 1);
      const double frac = t - static_cast<double>(i);
      return d[i] * (1.0 - frac) + d[i + 1] * frac;
    }
  }
  return 0.0;
}

double eval_potential(const Potential& q, int e, double x) { return q.eval(e, x); }

bool Potential::is_identically_zero() const {
  for (const auto& d : data_)
    for (double v : d)
      if (v != 0.0) return false;
  return true;
}

namespace {

// Interior breakpoints where the integrand loses smoothness: sample knots
// plus zero crossings of the linear pieces (the positive part has a kink
// there).
std::vector<double> positive_part_breakpoints(const Potential& q, int e) {
  std::vector<double> knots;
  const double len = q.edge_length(e);
  if (q.kind() == PotentialKind::Samples) {
    const std::vector<double>& d = q.data()[static_cast<size_t>(e)];
    const size_t n = d.size() - 1;
    const double h = len / static_cast<double>(n);
    for (size_t i = 1; i < n; ++i) knots.push_back(h * static_cast<double>(i));
    for (size_t i = 0; i < n; ++i) {
      const double a = d[i];
      const double b = d[i + 1];
      if ((a < 0.0) != (b < 0.0) && a != b)
        knots.push_back(h * (static_cast<double>(i) + a / (a - b)));
    }
  }
  return knots;
}

}  // namespace

double lp_norm_positive_part(const Potential& q, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm_positive_part: p must be >= 1");

  if (std::isinf(p)) {
    // Supremum of max(q, 0) over a per-edge evaluation grid. Exact for the
    // constant and sampled representations; grid-sup for polynomials.
    double sup = 0.0;
    for (int e = 0; e < q.num_edges(); ++e) {
      switch (q.kind()) {
        case PotentialKind::Constant:
          sup = std::max(sup, q.data()[static_cast<size_t>(e)][0]);
          break;
        case PotentialKind::Samples:
          for (double v : q.data()[static_cast<size_t>(e)]) sup = std::max(sup, v);
          break;
        case PotentialKind::Poly: {
          const int n = 4096;
          const double len = q.edge_length(e);
          for (int i = 0; i <= n; ++i)
            sup = std::max(sup, q.eval(e, len * static_cast<double>(i) / n));
          break;
        }
      }
    }
    return sup;
  }

  double total = 0.0;
  for (int e = 0; e < q.num_edges(); ++e) {
    const auto integrand = [&q, e, p](double x) {
      const double v = q.eval(e, x);
      return v > 0.0 ? std::pow(v, p) : 0.0;
    };
    total += integrate_simpson_pieces(integrand, 0.0, q.edge_length(e),
                                      positive_part_breakpoints(q, e));
  }
  return std::pow(total, 1.0 / p);
}

double integrate_potential(const Potential& q) {
  double total = 0.0;
  for (int e = 0; e < q.num_edges(); ++e) {
    switch (q.kind()) {
      case PotentialKind::Constant:
        total += q.data()[static_cast<size_t>(e)][0] * q.edge_length(e);
        break;
      case PotentialKind::Samples: {
        // Exact trapezoid integral of the piecewise-linear interpolant.
        const std::vector<double>& d = q.data()[static_cast<size_t>(e)];
        const double h = q.edge_length(e) / static_cast<double>(d.size() - 1);
        double s = 0.5 * (d.front() + d.back());
        for (size_t i = 1; i + 1 < d.size(); ++i) s += d[i];
        total += s * h;
        break;
      }
      case PotentialKind::Poly: {
        const std::vector<double>& c = q.data()[static_cast<size_t>(e)];
        const double len = q.edge_length(e);
        double s = 0.0;
        double xpow = len;
        for (size_t i = 0; i < c.size(); ++i) {
          s += c[i] * xpow / static_cast<double>(i + 1);
          xpow *= len;
        }
        total += s;
        break;
      }
    }
  }
  return total;
}

}  // namespace qgspec
