#pragma once

// Quadrature rules used throughout: Gauss-Legendre on intervals and an
// iterated product rule on the unit spheres S^n in R^{n+1}.
//
// The sphere rule uses Gauss-Legendre in each polar angle (with the
// sin^k weight folded into the integrand) and the trapezoid rule in the
// azimuth, which is exact for trigonometric polynomials below the node
// count. Node counts are padded well past `order` so that spherical
// polynomials of degree <= order integrate to full double precision.

#include "refpos/numerics.hpp"

namespace refpos {

enum class Domain { Interval, Sphere, Box };

struct Quadrature {
  Domain domain = Domain::Interval;
  int ambient_dim = 1;  // nodes live in R^{ambient_dim}
  Matrix nodes;         // one node per row
  Vector weights;       // all positive; sum = total measure of the domain
};

// Nodes and weights on [-1, 1].
struct GaussLegendre {
  Vector nodes;
  Vector weights;
};
GaussLegendre gauss_legendre(int m);

Quadrature interval_quadrature(double a, double b, int order);

// Surface area of S^n: 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double sphere_area(int n);

// Product rule on S^n subset R^{n+1}; order >= 1, n >= 1.
Quadrature sphere_quadrature(int n, int order);

}  // namespace refpos
