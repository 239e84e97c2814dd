#pragma once

// The kernel families on R^n, S^n, the unit ball, the half space, the
// forward light cone Omega and its tube T_Omega, together with Gram
// assembly (pointwise, reflected, sharp, and quadrature-smeared), the
// exact positivity phase predicates, and a randomized search for
// indefiniteness witnesses.

#include "refpos/numerics.hpp"
#include "refpos/quadrature.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace refpos {

enum class KernelTag {
  Riesz,                // ||x - y||^{-s} on R^n
  SphereQ,              // (1 - <x,y>)^{-s/2} on S^n
  CompactifiedK,        // 2^{-s/2} (1+||x||^2)^{s/2} ||x-y||^{-s} (1+||y||^2)^{s/2}
  BallR,                // (1 - 2<x,y> + ||x||^2 ||y||^2)^{-s/2} on the open unit ball
  HalfspaceReflected,   // ((x0+y0)^2 + ||x'-y'||^2)^{-s/2} on the open half space
  ConePower,            // Delta^{-lambda}(x + y) on the light cone, Delta(z) = [z,z]
  TubePower,            // Delta^{-lambda}(z + conj(w)) on the tube, principal branch
};

const char* kernel_tag_name(KernelTag tag);
std::optional<KernelTag> kernel_tag_from_name(const std::string& name);

struct KernelFamily {
  KernelTag tag;
  double exponent;  // s, or lambda for the cone/tube families
  int dim;          // ambient n
};

// Enforces the admissible parameter ranges (local integrability for the
// singular families, nonnegative exponents elsewhere).
void validate_family(const KernelFamily& fam);

// Families whose kernel blows up at coincident arguments.
bool diagonal_singular(KernelTag tag);

enum class Carrier { Euclidean, Sphere, Ball, Halfspace, Cone, Tube };
Carrier carrier_of(KernelTag tag);

// Lorentzian form [x,y] = x0 y0 - x1 y1 - ... on R^n, and the light cone
// membership test x0 > ||x'||.
double lorentz_quadratic(const Vector& z);
bool in_light_cone(const Vector& z, double margin = 0.0);

struct PointConfig {
  int dim = 0;  // the family's n
  Carrier carrier = Carrier::Euclidean;
  std::vector<Vector> points;    // real carriers (sphere points live in R^{n+1})
  std::vector<CVector> tube_points;

  std::size_t size() const { return carrier == Carrier::Tube ? tube_points.size() : points.size(); }
  double delta_min() const;  // minimum pairwise distance; +inf for < 2 points

  // Validates that every point lies in the declared carrier and that
  // delta_min > 0 when the family is singular on the diagonal.
  static PointConfig make(const KernelFamily& fam, std::vector<Vector> pts);
  static PointConfig make_tube(const KernelFamily& fam, std::vector<CVector> pts);
};

double eval_kernel(const KernelFamily& fam, const Vector& x, const Vector& y);
std::complex<double> eval_kernel(const KernelFamily& fam, const CVector& z, const CVector& w);

struct Pairing {
  enum class Kind { Plain, Reflected, Sharp };
  Kind kind = Kind::Plain;
  // Point involution for Reflected (tau) and Sharp (x -> x^sharp = -tau(x)).
  std::function<Vector(const Vector&)> map;

  static Pairing plain() { return {}; }
  static Pairing reflected(std::function<Vector(const Vector&)> tau) {
    return {Kind::Reflected, std::move(tau)};
  }
  static Pairing sharp(std::function<Vector(const Vector&)> sharp_map) {
    return {Kind::Sharp, std::move(sharp_map)};
  }
};

// G[i][j] = K(pairing-adjusted x_i, x_j). For the diagonal-singular
// families the diagonal carries the truncated-subordination self value
// (see singular_diagonal), which keeps the matrix finite and exactly
// positive semidefinite whenever the off-diagonal kernel is.
Matrix gram(const KernelFamily& fam, const PointConfig& pts, const Pairing& pairing = Pairing::plain());

// Hermitian Gram of the tube family, G[i][j] = Delta^{-lambda}(z_i + conj(z_j)).
CMatrix gram_tube(const KernelFamily& fam, const PointConfig& pts);

// Self value assigned to the Gram diagonal of a singular family: the
// kernel is u^{-p} in a squared separation u, and u^{-p} equals the
// Laplace integral of t^{p-1}/Gamma(p); truncating that integral at
// T = kappa/u_min leaves every off-diagonal entry exact to ~e^{-kappa}
// while the diagonal becomes T^p / (p Gamma(p)), and the truncated
// matrix is a positive combination of exp(-t u) Grams, hence PSD.
double singular_diagonal(double p, double u_min, double kappa = 50.0);

struct Bump {
  std::function<double(const Vector&)> f;
};

// M[i][j] = sum_{a != b} w_a w_b f_i(x_a) f_j(x_b) K(x_a, x_b) with the
// pairing applied to the first argument; coincident-argument terms are
// skipped (the kernels are integrable, so the omitted diagonal vanishes
// under quadrature refinement).
Matrix smeared_gram(const KernelFamily& fam, const std::vector<Bump>& bumps, const Quadrature& quad,
                    const Pairing& pairing = Pairing::plain());

// Refines the quadrature until the smeared Gram moves by less than
// `target` in relative Frobenius norm, starting from `order`.
Matrix smeared_gram_refined(const KernelFamily& fam, const std::vector<Bump>& bumps, int order,
                            const Pairing& pairing = Pairing::plain(), double target = 1e-6,
                            int max_rounds = 4);

// The exact theoretical positivity predicate of the family:
//   Riesz/SphereQ/CompactifiedK   0 <= s < n
//   BallR/HalfspaceReflected      s = 0 or s >= max(0, n-2)
//   ConePower/TubePower           lambda in {0, (n-2)/2} union ((n-2)/2, inf)
bool pd_phase_predicate(const KernelFamily& fam);

struct Witness {
  KernelFamily family;
  std::vector<Vector> points;
  Vector coefficients;
  double quadratic_form = 0.0;  // v^T G v, negative
  double scale = 0.0;           // spectral radius of G
  std::uint64_t seed = 0;
};

struct WitnessSearchConfig {
  int num_points = 10;
  int restarts = 10000;
  int jitter_steps = 150;
  std::uint64_t seed = 0;
  double tol = 1e-8;  // indefinite iff min eig < -tol * scale
};

// Latin-hypercube initial configurations with per-config jitter descent
// on the relative minimum eigenvalue. Returns the first witness found.
std::optional<Witness> witness_search(const KernelFamily& fam, const WitnessSearchConfig& cfg);

// Recomputes v^T G v for a stored witness.
double verify_witness(const Witness& w);

std::string witness_to_json(const Witness& w);
Witness witness_from_json(const std::string& text);
void save_witness(const Witness& w, const std::string& path);
Witness load_witness(const std::string& path);

// Seeded samplers for the family's carrier, used by the searches and
// the property suites.
std::vector<Vector> sample_carrier(const KernelFamily& fam, int count, std::mt19937_64& rng);

}  // namespace refpos
