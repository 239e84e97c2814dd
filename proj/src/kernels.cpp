#include "refpos/kernels.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace refpos {

namespace {

using json = nlohmann::json;

double sq(double v) { return v * v; }

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

const char* kernel_tag_name(KernelTag tag) {
  switch (tag) {
    case KernelTag::Riesz: return "riesz";
    case KernelTag::SphereQ: return "sphere_Q";
    case KernelTag::CompactifiedK: return "compactified_K";
    case KernelTag::BallR: return "ball_R";
    case KernelTag::HalfspaceReflected: return "halfspace_reflected";
    case KernelTag::ConePower: return "cone_power";
    case KernelTag::TubePower: return "tube_power";
  }
  return "?";
}

std::optional<KernelTag> kernel_tag_from_name(const std::string& name) {
  for (KernelTag t : {KernelTag::Riesz, KernelTag::SphereQ, KernelTag::CompactifiedK,
                      KernelTag::BallR, KernelTag::HalfspaceReflected, KernelTag::ConePower,
                      KernelTag::TubePower})
    if (name == kernel_tag_name(t)) return t;
  return std::nullopt;
}

void validate_family(const KernelFamily& fam) {
  if (fam.dim < 1) fail("kernel family: dimension must be positive");
  const double s = fam.exponent;
  switch (fam.tag) {
    case KernelTag::Riesz:
    case KernelTag::SphereQ:
    case KernelTag::CompactifiedK:
      if (!(s >= 0.0 && s < fam.dim))
        fail(std::string(kernel_tag_name(fam.tag)) + ": local integrability requires 0 <= s < n, got s=" +
             std::to_string(s) + ", n=" + std::to_string(fam.dim));
      break;
    case KernelTag::BallR:
    case KernelTag::HalfspaceReflected:
      if (!(s >= 0.0)) fail(std::string(kernel_tag_name(fam.tag)) + ": requires s >= 0");
      break;
    case KernelTag::ConePower:
    case KernelTag::TubePower:
      if (!(s >= 0.0)) fail(std::string(kernel_tag_name(fam.tag)) + ": requires lambda >= 0");
      break;
  }
}

bool diagonal_singular(KernelTag tag) {
  return tag == KernelTag::Riesz || tag == KernelTag::SphereQ || tag == KernelTag::CompactifiedK;
}

Carrier carrier_of(KernelTag tag) {
  switch (tag) {
    case KernelTag::Riesz:
    case KernelTag::CompactifiedK: return Carrier::Euclidean;
    case KernelTag::SphereQ: return Carrier::Sphere;
    case KernelTag::BallR: return Carrier::Ball;
    case KernelTag::HalfspaceReflected: return Carrier::Halfspace;
    case KernelTag::ConePower: return Carrier::Cone;
    case KernelTag::TubePower: return Carrier::Tube;
  }
  return Carrier::Euclidean;
}

double lorentz_quadratic(const Vector& z) {
  double q = z(0) * z(0);
  for (int j = 1; j < z.size(); ++j) q -= z(j) * z(j);
  return q;
}

bool in_light_cone(const Vector& z, double margin) {
  return z(0) > z.tail(z.size() - 1).norm() + margin;
}

double PointConfig::delta_min() const {
  double dmin = std::numeric_limits<double>::infinity();
  if (carrier == Carrier::Tube) {
    for (size_t i = 0; i < tube_points.size(); ++i)
      for (size_t j = i + 1; j < tube_points.size(); ++j)
        dmin = std::min(dmin, (tube_points[i] - tube_points[j]).norm());
  } else {
    for (size_t i = 0; i < points.size(); ++i)
      for (size_t j = i + 1; j < points.size(); ++j)
        dmin = std::min(dmin, (points[i] - points[j]).norm());
  }
  return dmin;
}

PointConfig PointConfig::make(const KernelFamily& fam, std::vector<Vector> pts) {
  validate_family(fam);
  const Carrier carrier = carrier_of(fam.tag);
  if (carrier == Carrier::Tube) fail("PointConfig::make: use make_tube for the tube family");
  const int expected = carrier == Carrier::Sphere ? fam.dim + 1 : fam.dim;
  for (size_t i = 0; i < pts.size(); ++i) {
    const Vector& x = pts[i];
    if (x.size() != expected)
      fail("point " + std::to_string(i) + " has dimension " + std::to_string(x.size()) +
           ", expected " + std::to_string(expected));
    switch (carrier) {
      case Carrier::Sphere:
        if (std::abs(x.norm() - 1.0) > 1e-12)
          fail("point " + std::to_string(i) + " is off the unit sphere by " +
               std::to_string(std::abs(x.norm() - 1.0)));
        break;
      case Carrier::Ball:
        if (!(x.norm() < 1.0)) fail("point " + std::to_string(i) + " is outside the open unit ball");
        break;
      case Carrier::Halfspace:
        if (!(x(0) > 0.0)) fail("point " + std::to_string(i) + " has x0 <= 0, outside the open half space");
        break;
      case Carrier::Cone:
        if (!in_light_cone(x)) fail("point " + std::to_string(i) + " is outside the open light cone");
        break;
      default: break;
    }
  }
  PointConfig cfg;
  cfg.dim = fam.dim;
  cfg.carrier = carrier;
  cfg.points = std::move(pts);
  if (diagonal_singular(fam.tag) && cfg.points.size() > 1 && !(cfg.delta_min() > 0.0))
    fail("coincident points in a configuration for a diagonal-singular kernel");
  return cfg;
}

PointConfig PointConfig::make_tube(const KernelFamily& fam, std::vector<CVector> pts) {
  validate_family(fam);
  if (carrier_of(fam.tag) != Carrier::Tube) fail("PointConfig::make_tube: family is not tube-carried");
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].size() != fam.dim)
      fail("tube point " + std::to_string(i) + " has wrong dimension");
    Vector re(fam.dim);
    for (int j = 0; j < fam.dim; ++j) re(j) = pts[i](j).real();
    if (!in_light_cone(re)) fail("tube point " + std::to_string(i) + " has real part outside the light cone");
  }
  PointConfig cfg;
  cfg.dim = fam.dim;
  cfg.carrier = Carrier::Tube;
  cfg.tube_points = std::move(pts);
  return cfg;
}

double eval_kernel(const KernelFamily& fam, const Vector& x, const Vector& y) {
  validate_family(fam);
  const double s = fam.exponent;
  switch (fam.tag) {
    case KernelTag::Riesz: {
      const double d = (x - y).norm();
      if (s > 0.0 && d == 0.0) throw std::domain_error("riesz kernel is singular at coincident points");
      return s == 0.0 ? 1.0 : std::pow(d, -s);
    }
    case KernelTag::SphereQ: {
      const double u = 1.0 - x.dot(y);
      if (s > 0.0 && u <= 0.0) throw std::domain_error("sphere_Q kernel is singular at coincident points");
      return s == 0.0 ? 1.0 : std::pow(u, -s / 2.0);
    }
    case KernelTag::CompactifiedK: {
      const double d = (x - y).norm();
      if (s > 0.0 && d == 0.0)
        throw std::domain_error("compactified_K kernel is singular at coincident points");
      if (s == 0.0) return 1.0;
      return std::pow(2.0, -s / 2.0) * std::pow(1.0 + x.squaredNorm(), s / 2.0) * std::pow(d, -s) *
             std::pow(1.0 + y.squaredNorm(), s / 2.0);
    }
    case KernelTag::BallR: {
      const double base = 1.0 - 2.0 * x.dot(y) + x.squaredNorm() * y.squaredNorm();
      return std::pow(base, -s / 2.0);
    }
    case KernelTag::HalfspaceReflected: {
      double base = sq(x(0) + y(0));
      for (int j = 1; j < x.size(); ++j) base += sq(x(j) - y(j));
      return std::pow(base, -s / 2.0);
    }
    case KernelTag::ConePower: {
      const Vector z = x + y;
      const double delta = lorentz_quadratic(z);
      if (!(delta > 0.0)) throw std::domain_error("cone_power: x + y left the light cone");
      return std::pow(delta, -s);
    }
    case KernelTag::TubePower:
      throw std::invalid_argument("tube_power takes complex arguments");
  }
  return 0.0;
}

std::complex<double> eval_kernel(const KernelFamily& fam, const CVector& z, const CVector& w) {
  validate_family(fam);
  if (fam.tag != KernelTag::TubePower)
    throw std::invalid_argument("complex evaluation is only defined for tube_power");
  CVector u = z + w.conjugate();
  std::complex<double> delta = u(0) * u(0);
  for (int j = 1; j < u.size(); ++j) delta -= u(j) * u(j);
  if (!(delta.real() > 0.0))
    throw std::domain_error("tube_power: Re Delta(z + conj(w)) <= 0, outside the principal branch region");
  // principal branch of log Delta, normalized to 0 at e0
  return std::exp(-fam.exponent * std::log(delta));
}

double singular_diagonal(double p, double u_min, double kappa) {
  if (!(u_min > 0.0)) fail("singular_diagonal: need a positive minimal separation");
  if (p == 0.0) return 1.0;
  const double T = kappa / u_min;
  return std::pow(T, p) / (p * std::tgamma(p));
}

namespace {

// Squared-separation variable and exponent of the subordination
// representation u^{-p}, per singular family.
struct SubordinationData {
  double p;
  double u_min;
  double multiplier2;  // diagonal congruence factor squared (compactified_K)
};

SubordinationData subordination_data(const KernelFamily& fam, const PointConfig& pts, size_t i) {
  SubordinationData d{0.0, 0.0, 1.0};
  switch (fam.tag) {
    case KernelTag::Riesz:
      d.p = fam.exponent / 2.0;
      d.u_min = sq(pts.delta_min());
      break;
    case KernelTag::SphereQ: {
      d.p = fam.exponent / 2.0;
      double umin = std::numeric_limits<double>::infinity();
      for (size_t a = 0; a < pts.points.size(); ++a)
        for (size_t b = a + 1; b < pts.points.size(); ++b)
          umin = std::min(umin, 1.0 - pts.points[a].dot(pts.points[b]));
      d.u_min = umin;
      break;
    }
    case KernelTag::CompactifiedK: {
      d.p = fam.exponent / 2.0;
      d.u_min = sq(pts.delta_min());
      const double m = std::pow(2.0, -fam.exponent / 4.0) *
                       std::pow(1.0 + pts.points[i].squaredNorm(), fam.exponent / 2.0);
      d.multiplier2 = m * m;
      break;
    }
    default: break;
  }
  return d;
}

Vector apply_pairing(const Pairing& pairing, const Vector& x) {
  switch (pairing.kind) {
    case Pairing::Kind::Plain: return x;
    case Pairing::Kind::Reflected:
    case Pairing::Kind::Sharp:
      if (!pairing.map) fail("pairing requires a point map");
      return pairing.map(x);
  }
  return x;
}

}  // namespace

Matrix gram(const KernelFamily& fam, const PointConfig& pts, const Pairing& pairing) {
  validate_family(fam);
  if (pts.carrier == Carrier::Tube) fail("gram: use gram_tube for the tube family");
  const int n = static_cast<int>(pts.points.size());
  Matrix G(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      try {
        switch (pairing.kind) {
          case Pairing::Kind::Plain:
            if (i == j && diagonal_singular(fam.tag) && fam.exponent > 0.0) {
              const auto d = subordination_data(fam, pts, i);
              G(i, j) = d.multiplier2 * singular_diagonal(d.p, d.u_min);
            } else {
              G(i, j) = eval_kernel(fam, pts.points[i], pts.points[j]);
            }
            break;
          case Pairing::Kind::Reflected:
            G(i, j) = eval_kernel(fam, apply_pairing(pairing, pts.points[i]), pts.points[j]);
            break;
          case Pairing::Kind::Sharp: {
            // additive semigroup composition x_i + x_j^sharp evaluated
            // through the family's one-argument profile
            const Vector z = pts.points[i] + apply_pairing(pairing, pts.points[j]);
            switch (fam.tag) {
              case KernelTag::Riesz:
              case KernelTag::HalfspaceReflected:
                G(i, j) = fam.exponent == 0.0 ? 1.0 : std::pow(z.norm(), -fam.exponent);
                break;
              case KernelTag::ConePower: {
                const double delta = lorentz_quadratic(z);
                if (!(delta > 0.0))
                  throw std::domain_error("sharp pairing left the light cone");
                G(i, j) = std::pow(delta, -fam.exponent);
                break;
              }
              default:
                fail("sharp pairing is defined for the semigroup-carried families only");
            }
            break;
          }
        }
      } catch (const std::domain_error& e) {
        std::ostringstream os;
        os << e.what() << " at entry (" << i << "," << j << ")";
        throw std::domain_error(os.str());
      }
    }
  }
  return G;
}

CMatrix gram_tube(const KernelFamily& fam, const PointConfig& pts) {
  if (pts.carrier != Carrier::Tube) fail("gram_tube: configuration is not tube-carried");
  const int n = static_cast<int>(pts.tube_points.size());
  CMatrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      try {
        G(i, j) = eval_kernel(fam, pts.tube_points[i], pts.tube_points[j]);
      } catch (const std::domain_error& e) {
        std::ostringstream os;
        os << e.what() << " at entry (" << i << "," << j << ")";
        throw std::domain_error(os.str());
      }
    }
  return G;
}

Matrix smeared_gram(const KernelFamily& fam, const std::vector<Bump>& bumps, const Quadrature& quad,
                    const Pairing& pairing) {
  validate_family(fam);
  if (diagonal_singular(fam.tag) && fam.exponent >= fam.dim) {
    std::ostringstream os;
    os << kernel_tag_name(fam.tag) << " is not integrable against the quadrature: s="
       << fam.exponent << " >= n=" << fam.dim;
    throw std::invalid_argument(os.str());
  }
  const int nb = static_cast<int>(bumps.size());
  const auto rows = quad.nodes.rows();

  Matrix F(rows, nb);  // w_a f_j(x_a)
  std::vector<Vector> xs(rows), xps(rows);
  for (Eigen::Index a = 0; a < rows; ++a) {
    xs[a] = quad.nodes.row(a).transpose();
    xps[a] = pairing.kind == Pairing::Kind::Plain ? xs[a] : apply_pairing(pairing, xs[a]);
    for (int j = 0; j < nb; ++j) F(a, j) = quad.weights(a) * bumps[j].f(xs[a]);
  }

  // M[i][j] = sum_{a,b} (w_a f_i(x_a)) (w_b f_j(x_b)) K(pair(x_a), x_b),
  // skipping terms where the kernel arguments coincide.
  Matrix M = Matrix::Zero(nb, nb);
  const double coincide2 = 1e-24;
  const bool skip_coincident = diagonal_singular(fam.tag) && fam.exponent > 0.0;
  Vector krow(rows), kv(nb);
  for (Eigen::Index a = 0; a < rows; ++a) {
    bool row_used = false;
    for (int i = 0; i < nb && !row_used; ++i) row_used = F(a, i) != 0.0;
    if (!row_used) continue;
    for (Eigen::Index b = 0; b < rows; ++b) {
      if (skip_coincident && (xps[a] - xs[b]).squaredNorm() <= coincide2) {
        krow(b) = 0.0;
        continue;
      }
      krow(b) = eval_kernel(fam, xps[a], xs[b]);
    }
    kv = F.transpose() * krow;
    for (int i = 0; i < nb; ++i)
      if (F(a, i) != 0.0) M.row(i) += F(a, i) * kv.transpose();
  }
  // symmetrize away quadrature round-off
  return 0.5 * (M + M.transpose());
}

Matrix smeared_gram_refined(const KernelFamily& fam, const std::vector<Bump>& bumps, int order,
                            const Pairing& pairing, double target, int max_rounds) {
  if (carrier_of(fam.tag) != Carrier::Sphere)
    throw std::invalid_argument("smeared_gram_refined currently refines sphere quadratures only");
  Matrix prev = smeared_gram(fam, bumps, sphere_quadrature(fam.dim, order), pairing);
  for (int round = 1; round <= max_rounds; ++round) {
    const int next_order = order + round * std::max(2, order / 2);
    Matrix cur = smeared_gram(fam, bumps, sphere_quadrature(fam.dim, next_order), pairing);
    const double change = (cur - prev).norm() / std::max(1e-300, cur.norm());
    prev = cur;
    if (change < target) break;
  }
  return prev;
}

bool pd_phase_predicate(const KernelFamily& fam) {
  validate_family(fam);
  const double s = fam.exponent;
  const int n = fam.dim;
  switch (fam.tag) {
    case KernelTag::Riesz:
    case KernelTag::SphereQ:
    case KernelTag::CompactifiedK:
      return s >= 0.0 && s < n;  // the family invariant already enforces this
    case KernelTag::BallR:
    case KernelTag::HalfspaceReflected:
      return s == 0.0 || s >= std::max(0.0, double(n - 2));
    case KernelTag::ConePower:
    case KernelTag::TubePower: {
      const double edge = 0.5 * (n - 2);
      return s == 0.0 || s >= std::max(0.0, edge);
    }
  }
  return false;
}

namespace {

// Latin hypercube sample in [0,1]^d: one stratum per point and axis.
Matrix latin_hypercube(int count, int d, std::mt19937_64& rng) {
  Matrix out(count, d);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int j = 0; j < d; ++j) {
    std::vector<int> perm(count);
    for (int i = 0; i < count; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < count; ++i) out(i, j) = (perm[i] + unif(rng)) / count;
  }
  return out;
}

std::vector<Vector> carrier_points_from_unit(const KernelFamily& fam, const Matrix& unit) {
  const int count = static_cast<int>(unit.rows());
  const int n = fam.dim;
  std::vector<Vector> pts(count);
  for (int i = 0; i < count; ++i) {
    Vector x;
    switch (carrier_of(fam.tag)) {
      case Carrier::Euclidean: {
        x = Vector(n);
        for (int j = 0; j < n; ++j) x(j) = 4.0 * unit(i, j) - 2.0;
        break;
      }
      case Carrier::Sphere: {
        x = Vector(n + 1);
        // Gaussianize via inverse-free Box-Muller on pairs of strata
        for (int j = 0; j <= n; ++j) {
          const double u = std::min(std::max(unit(i, j % n), 1e-12), 1.0 - 1e-12);
          const double v = unit(i, (j + 1) % n);
          x(j) = std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * (v + 0.37 * j));
        }
        x.normalize();
        break;
      }
      case Carrier::Ball: {
        x = Vector(n);
        for (int j = 0; j < n; ++j) x(j) = 2.0 * unit(i, j) - 1.0;
        const double r = std::pow(unit(i, 0), 1.0 / n) * 0.97;
        if (x.norm() > 0) x *= r / x.norm();
        break;
      }
      case Carrier::Halfspace: {
        x = Vector(n);
        x(0) = std::exp(std::log(0.05) + unit(i, 0) * (std::log(1.5) - std::log(0.05)));
        for (int j = 1; j < n; ++j) x(j) = 3.0 * (unit(i, j) - 0.5);
        break;
      }
      case Carrier::Cone: {
        x = Vector(n);
        for (int j = 1; j < n; ++j) x(j) = 2.0 * unit(i, j) - 1.0;
        x(0) = x.tail(n - 1).norm() + 0.05 + 1.45 * unit(i, 0);
        break;
      }
      case Carrier::Tube:
        throw std::invalid_argument("witness search over tube configurations is not supported");
    }
    pts[i] = x;
  }
  return pts;
}

void clamp_to_carrier(const KernelFamily& fam, Vector& x) {
  const int n = fam.dim;
  switch (carrier_of(fam.tag)) {
    case Carrier::Sphere: x.normalize(); break;
    case Carrier::Ball:
      if (x.norm() >= 0.995) x *= 0.99 / x.norm();
      break;
    case Carrier::Halfspace: x(0) = std::max(x(0), 1e-3); break;
    case Carrier::Cone: {
      const double r = x.tail(n - 1).norm();
      if (x(0) < r + 1e-3) x(0) = r + 1e-3;
      break;
    }
    default: break;
  }
}

double rel_min_eig(const Matrix& G, Vector* evec = nullptr) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(G);
  const double lo = es.eigenvalues()(0);
  const double hi = es.eigenvalues()(G.rows() - 1);
  const double scale = std::max(std::abs(lo), std::abs(hi));
  if (evec) *evec = es.eigenvectors().col(0);
  return scale > 0 ? lo / scale : 0.0;
}

}  // namespace

std::vector<Vector> sample_carrier(const KernelFamily& fam, int count, std::mt19937_64& rng) {
  return carrier_points_from_unit(fam, latin_hypercube(count, std::max(fam.dim, 2), rng));
}

std::optional<Witness> witness_search(const KernelFamily& fam, const WitnessSearchConfig& cfg) {
  validate_family(fam);
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    auto pts = sample_carrier(fam, cfg.num_points, rng);
    auto config = PointConfig::make(fam, pts);
    double cur = rel_min_eig(gram(fam, config));
    double sigma = 0.15;
    for (int step = 0; step < cfg.jitter_steps && cur > -cfg.tol; ++step) {
      auto trial = config.points;
      for (auto& x : trial) {
        for (int j = 0; j < x.size(); ++j) x(j) += sigma * gauss(rng);
        clamp_to_carrier(fam, x);
      }
      PointConfig tcfg;
      try {
        tcfg = PointConfig::make(fam, trial);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const double val = rel_min_eig(gram(fam, tcfg));
      if (val < cur) {
        cur = val;
        config = std::move(tcfg);
        sigma = std::min(sigma * 1.3, 0.5);
      } else {
        sigma = std::max(sigma * 0.8, 1e-4);
      }
    }
    if (cur < -cfg.tol) {
      Matrix G = gram(fam, config);
      Vector v;
      rel_min_eig(G, &v);
      Eigen::SelfAdjointEigenSolver<Matrix> es(G);
      Witness w;
      w.family = fam;
      w.points = config.points;
      w.coefficients = v;
      w.quadratic_form = v.dot(G * v);
      w.scale = std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(G.rows() - 1)));
      w.seed = cfg.seed;
      return w;
    }
  }
  return std::nullopt;
}

double verify_witness(const Witness& w) {
  auto config = PointConfig::make(w.family, w.points);
  const Matrix G = gram(w.family, config);
  return w.coefficients.dot(G * w.coefficients);
}

std::string witness_to_json(const Witness& w) {
  json j;
  j["family"] = kernel_tag_name(w.family.tag);
  j["s"] = w.family.exponent;
  j["n"] = w.family.dim;
  j["seed"] = w.seed;
  j["points"] = json::array();
  for (const auto& p : w.points) j["points"].push_back(std::vector<double>(p.data(), p.data() + p.size()));
  j["coefficients"] = std::vector<double>(w.coefficients.data(), w.coefficients.data() + w.coefficients.size());
  j["quadratic_form"] = w.quadratic_form;
  j["scale"] = w.scale;
  return j.dump(2);
}

Witness witness_from_json(const std::string& text) {
  json j = json::parse(text);
  Witness w;
  const auto tag = kernel_tag_from_name(j.at("family").get<std::string>());
  if (!tag) throw std::invalid_argument("unknown kernel family in witness file");
  w.family = {*tag, j.at("s").get<double>(), j.at("n").get<int>()};
  w.seed = j.value("seed", 0ULL);
  for (const auto& p : j.at("points")) {
    const auto v = p.get<std::vector<double>>();
    w.points.push_back(Eigen::Map<const Vector>(v.data(), v.size()));
  }
  const auto c = j.at("coefficients").get<std::vector<double>>();
  w.coefficients = Eigen::Map<const Vector>(c.data(), c.size());
  w.quadratic_form = j.at("quadratic_form").get<double>();
  w.scale = j.at("scale").get<double>();
  return w;
}

void save_witness(const Witness& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open witness file for writing: " + path);
  out << witness_to_json(w) << "\n";
}

Witness load_witness(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open witness file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return witness_from_json(ss.str());
}

}  // namespace refpos
