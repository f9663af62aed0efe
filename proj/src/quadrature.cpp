#include "zreg/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace zreg {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Node of the transform s = L/(1 + e^{-2u}), u = (pi/2) sinh t, which maps
// the real line onto (0, L). s_small is the distance from the nearer
// endpoint, kept in product form so endpoint singularities see full
// relative precision.
struct NodePair {
  double s_small;
  double weight;  // (L/2) * (pi/2) cosh t / cosh^2 u
};

bool make_pair(double t, double length, NodePair* out) {
  double u = kHalfPi * std::sinh(t);
  if (std::abs(u) > 350.0) return false;
  double ch = std::cosh(u);
  double w = kHalfPi * std::cosh(t) / (ch * ch);
  double s_small = length / (1.0 + std::exp(2.0 * std::abs(u)));
  if (s_small == 0.0 || w == 0.0) return false;
  out->s_small = s_small;
  out->weight = w * length / 2.0;
  return true;
}

}  // namespace

ComplexValue integrate_tanh_sinh(const std::function<ComplexValue(double)>& f,
                                 double length, double tol, int max_level) {
  if (!(length > 0.0)) throw DomainError("integrate_tanh_sinh: empty interval");

  // node_sum accumulates w_j f_j over every node of the current grid; the
  // integral estimate is h * node_sum. Halving h only adds the odd nodes.
  KahanSum node_sum;
  NodePair center{};
  make_pair(0.0, length, &center);
  node_sum.add(center.weight * f(length / 2.0));

  double h = 1.0;
  auto add_nodes = [&](double step, int stride) {
    int quiet = 0;
    for (int j = 1;; j += stride) {
      NodePair p{};
      if (!make_pair(step * j, length, &p)) break;
      ComplexValue contribution =
          p.weight * (f(p.s_small) + f(length - p.s_small));
      node_sum.add(contribution);
      if (std::abs(contribution) < 1e-18 * (1.0 + std::abs(node_sum.value()))) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
    }
  };

  add_nodes(h, 1);
  ComplexValue estimate = h * node_sum.value();
  for (int level = 1; level <= max_level; ++level) {
    add_nodes(h / 2.0, 2);
    h /= 2.0;
    ComplexValue refined = h * node_sum.value();
    bool converged = level >= 2 && std::abs(refined - estimate) <
                                       tol * (1.0 + std::abs(refined));
    estimate = refined;
    if (converged) return estimate;
  }
  throw DomainError("integrate_tanh_sinh: did not converge");
}

double integrate_tanh_sinh_real(const std::function<double(double)>& f,
                                double length, double tol, int max_level) {
  return integrate_tanh_sinh(
             [&](double s) { return ComplexValue(f(s), 0.0); }, length, tol,
             max_level)
      .real();
}

}  // namespace zreg
