#ifndef QGSPEC_QUADRATURE_HPP
#define QGSPEC_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace qgspec {

/// Composite Simpson rule on [a, b] with dyadic panel refinement until the
/// relative change between successive levels drops below rel_tol (absolute
/// floor abs_floor). Deterministic; intended for smooth integrands.
double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         double rel_tol = 1e-9, double abs_floor = 1e-12);

/// Same policy applied piecewise between consecutive breakpoints. The
/// breakpoints must lie in [a, b]; a and b are added automatically.
double integrate_simpson_pieces(const std::function<double(double)>& f, double a, double b,
                                const std::vector<double>& breakpoints, double rel_tol = 1e-9,
                                double abs_floor = 1e-12);

}  // namespace qgspec

#endif
