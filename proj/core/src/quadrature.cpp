#include "qgspec/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace qgspec {

double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         double rel_tol, double abs_floor) {
  if (!(b > a)) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  long panels = 4;
  const long max_panels = 1L << 22;

  // Running interior sums: with n panels the composite rule is
  // (h/3) (f_a + f_b + 4 * sum(odd nodes) + 2 * sum(even interior nodes)).
  double odd = 0.0;
  double even = 0.0;
  for (long i = 1; i < panels; i += 2) odd += f(a + i * (b - a) / panels);
  for (long i = 2; i < panels; i += 2) even += f(a + i * (b - a) / panels);

  double value = (b - a) / (3.0 * panels) * (fa + fb + 4.0 * odd + 2.0 * even);
  while (panels < max_panels) {
    even += odd;
    panels *= 2;
    odd = 0.0;
    for (long i = 1; i < panels; i += 2) odd += f(a + i * (b - a) / panels);
    const double next = (b - a) / (3.0 * panels) * (fa + fb + 4.0 * odd + 2.0 * even);
    const double change = std::abs(next - value);
    value = next;
    if (change <= std::max(rel_tol * std::abs(next), abs_floor)) break;
  }
  return value;
}

double integrate_simpson_pieces(const std::function<double(double)>& f, double a, double b,
                                const std::vector<double>& breakpoints, double rel_tol,
                                double abs_floor) {
  std::vector<double> knots;
  knots.push_back(a);
  for (double x : breakpoints)
    if (x > a && x < b) knots.push_back(x);
  knots.push_back(b);
  std::sort(knots.begin(), knots.end());

  double total = 0.0;
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    if (knots[i + 1] - knots[i] <= 0.0) continue;
    total += integrate_simpson(f, knots[i], knots[i + 1], rel_tol, abs_floor);
  }
  return total;
}

}  // namespace qgspec
