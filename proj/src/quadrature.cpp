#include "refpos/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace refpos {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

GaussLegendre gauss_legendre(int m) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussLegendre gl;
  gl.nodes = Vector(m);
  gl.weights = Vector(m);
  // Newton iteration on P_m from the Chebyshev-like initial guess.
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes(i) = -x;
    gl.nodes(m - 1 - i) = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.weights(i) = w;
    gl.weights(m - 1 - i) = w;
  }
  if (m % 2 == 1) gl.nodes((m - 1) / 2) = 0.0;
  return gl;
}

Quadrature interval_quadrature(double a, double b, int order) {
  if (!(b > a)) throw std::invalid_argument("interval_quadrature: need b > a");
  const auto gl = gauss_legendre(std::max(order, 1));
  Quadrature q;
  q.domain = Domain::Interval;
  q.ambient_dim = 1;
  q.nodes = Matrix(gl.nodes.size(), 1);
  q.weights = Vector(gl.nodes.size());
  for (int i = 0; i < gl.nodes.size(); ++i) {
    q.nodes(i, 0) = 0.5 * (a + b) + 0.5 * (b - a) * gl.nodes(i);
    q.weights(i) = 0.5 * (b - a) * gl.weights(i);
  }
  return q;
}

double sphere_area(int n) {
  return 2.0 * std::pow(kPi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

Quadrature sphere_quadrature(int n, int order) {
  if (n < 1) throw std::invalid_argument("sphere_quadrature: S^0 is unsupported");
  if (order < 1) throw std::invalid_argument("sphere_quadrature: order must be >= 1");

  // Azimuth ring on S^1: m_phi uniform points, exact for trig degree < m_phi.
  const int m_phi = 2 * order + 16;
  Matrix nodes(m_phi, 2);
  Vector weights(m_phi);
  for (int i = 0; i < m_phi; ++i) {
    const double phi = 2.0 * kPi * i / m_phi;
    nodes(i, 0) = std::cos(phi);
    nodes(i, 1) = std::sin(phi);
    weights(i) = 2.0 * kPi / m_phi;
  }

  // Wrap one polar angle at a time: S^k -> S^{k+1} via
  // x = (cos th, sin th * y), dmu_{k+1} = sin^k(th) dth dmu_k.
  const int m_theta = order + 16;
  const auto gl = gauss_legendre(m_theta);
  for (int k = 1; k < n; ++k) {
    const auto rows = nodes.rows();
    Matrix next(rows * m_theta, k + 2);
    Vector wnext(rows * m_theta);
    for (int t = 0; t < m_theta; ++t) {
      const double theta = 0.5 * kPi * (gl.nodes(t) + 1.0);
      const double wt = 0.5 * kPi * gl.weights(t) * std::pow(std::sin(theta), k);
      const double c = std::cos(theta), s = std::sin(theta);
      for (Eigen::Index r = 0; r < rows; ++r) {
        const auto out = t * rows + r;
        next(out, 0) = c;
        for (int j = 0; j <= k; ++j) next(out, j + 1) = s * nodes(r, j);
        wnext(out) = wt * weights(r);
      }
    }
    nodes.swap(next);
    weights.swap(wnext);
  }

  Quadrature q;
  q.domain = Domain::Sphere;
  q.ambient_dim = n + 1;
  q.nodes = std::move(nodes);
  q.weights = std::move(weights);
  return q;
}

}  // namespace refpos
