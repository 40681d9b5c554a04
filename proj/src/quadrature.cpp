#include "tempop/quadrature.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace tempop {

namespace {

// 15-point Kronrod nodes/weights on [-1, 1] with the embedded 7-point Gauss
// rule; nodes are symmetric, only the non-negative half is tabulated.
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};
// Gauss weights aligned with the odd Kronrod nodes (indices 1, 3, 5, 7)
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct Segment {
  double a, b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double offset = half * kKronrodNodes[i];
    const double left = f(center - offset);
    const double right = f(center + offset);
    const double pair = (i == 7) ? left : left + right;
    kronrod += kKronrodWeights[i] * pair;
    // odd indices are the embedded G7 nodes (the center node included)
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  const double error = std::abs(kronrod - gauss);
  return Segment{a, b, kronrod, error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, double rel_tol,
                           int max_subdivisions) {
  if (!(b > a)) {
    if (b == a) return {0.0, 0.0, 0};
    throw std::invalid_argument("integrate: requires a < b");
  }
  std::priority_queue<Segment> queue;
  queue.push(evaluate(f, a, b));
  double total = queue.top().value;
  double total_error = queue.top().error;
  int used = 0;
  while (total_error > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (used >= max_subdivisions)
      throw std::runtime_error("integrate: quadrature tolerance unreachable");
    Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = evaluate(f, worst.a, mid);
    Segment right = evaluate(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++used;
  }
  return {total, total_error, used};
}

}  // namespace tempop
