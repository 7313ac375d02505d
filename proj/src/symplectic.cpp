#include "lg2/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/SVD>

#include "lg2/errors.hpp"

namespace lg2::symplectic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI{0.0, 1.0};

double norm3(const std::array<Complex, 3>& u)
{
  return std::sqrt(std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2]));
}

// Bits-to-double so samples do not depend on the library's distributions.
double unit_uniform(std::mt19937_64& rng)
{
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::array<Complex, 3> triple_of(const lie::ComplexMatrix& m)
{
  return {m(0, 0), m(0, 1), m(1, 0)};
}

lie::ComplexMatrix matrix_of(const std::array<Complex, 3>& u)
{
  lie::ComplexMatrix m(2, 2);
  m << u[0], u[1], u[2], -u[0];
  return m;
}

std::size_t real_span_dimension(const std::vector<std::array<Complex, 3>>& vectors)
{
  Eigen::MatrixXd m(static_cast<Eigen::Index>(vectors.size()), 6);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(2 * k)) = vectors[i][k].real();
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(2 * k + 1)) = vectors[i][k].imag();
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  double top = sv.size() ? sv(0) : 0.0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * std::max(1.0, top))
      ++rank;
  return rank;
}

} // namespace

TangentVector::TangentVector(OrbitPointSL2 base, std::array<Complex, 3> u, double tol)
    : base_(base), u_(u)
{
  if (tangency_residual() > tol * std::max(1.0, norm3(u_)))
    throw PreconditionError("vector is not tangent to the orbit at its base point");
}

lie::ComplexMatrix TangentVector::matrix() const
{
  return matrix_of(u_);
}

double TangentVector::tangency_residual() const
{
  return std::abs(2.0 * base_.x * u_[0] + base_.z * u_[1] + base_.y * u_[2]);
}

TangentVector TangentVector::times_i() const
{
  return TangentVector(base_, {kI * u_[0], kI * u_[1], kI * u_[2]});
}

double omega(const TangentVector& u, const TangentVector& v)
{
  const auto& a = u.base();
  const auto& b = v.base();
  if (a.x != b.x || a.y != b.y || a.z != b.z)
    throw PreconditionError("omega needs tangent vectors at the same base point");
  const auto& p = u.components();
  const auto& q = v.components();
  // tr(M_u M_v^dagger) for traceless 2x2 matrices
  Complex h = 2.0 * p[0] * std::conj(q[0]) + p[1] * std::conj(q[1]) + p[2] * std::conj(q[2]);
  return -h.imag();
}

GaussianRational omega_exact(const ExactTriple& u, const ExactTriple& v)
{
  GaussianRational h = GaussianRational(2) * u[0] * v[0].conj() + u[1] * v[1].conj() + u[2] * v[2].conj();
  return GaussianRational(-h.im());
}

std::array<TangentVector, 4> tangent_basis(const OrbitPointSL2& point)
{
  const std::array<Complex, 3> grad{2.0 * point.x, point.z, point.y};
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(grad[i]) > std::abs(grad[k]))
      k = i;
  if (std::abs(grad[k]) < 1e-12)
    throw DiagnosticError("orbit equation has vanishing gradient at this point");
  std::vector<std::array<Complex, 3>> kernel;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == k)
      continue;
    std::array<Complex, 3> v{0.0, 0.0, 0.0};
    v[j] = 1.0;
    v[k] = -grad[j] / grad[k];
    kernel.push_back(v);
  }
  TangentVector a(point, kernel[0]);
  TangentVector b(point, kernel[1]);
  return {a, b, a.times_i(), b.times_i()};
}

OrbitPointSL2 sphere_point(double p, double q, double r)
{
  if (std::abs(p * p + q * q + r * r - 1.0) > 1e-12)
    throw PreconditionError("(p,q,r) is not on the unit sphere");
  return {Complex(r, 0.0), Complex(-p, q), Complex(-p, -q)};
}

std::array<GaussianRational, 3> sphere_point_exact(const Rational& p, const Rational& q, const Rational& r)
{
  if (p * p + q * q + r * r != 1)
    throw PreconditionError("(p,q,r) is not on the unit sphere");
  return {GaussianRational(r), GaussianRational(-p, q), GaussianRational(-p, -q)};
}

std::array<std::array<Complex, 3>, 3> su2_basis()
{
  return {{{kI, 0.0, 0.0}, {0.0, 1.0, -1.0}, {0.0, kI, kI}}};
}

SphereReport check_sphere_lagrangian(std::size_t n_samples, std::uint64_t seed, double tol)
{
  SphereReport report;
  report.min_taming = std::numeric_limits<double>::infinity();
  std::mt19937_64 rng(seed);
  const auto basis = su2_basis();
  for (std::size_t s = 0; s < n_samples; ++s) {
    const double zc = 2.0 * unit_uniform(rng) - 1.0;
    const double phi = kTwoPi * unit_uniform(rng);
    const double rho = std::sqrt(std::max(0.0, 1.0 - zc * zc));
    const double p = rho * std::cos(phi);
    const double q = rho * std::sin(phi);
    const OrbitPointSL2 point = sphere_point(p, q, zc);
    const lie::ComplexMatrix sm = point.matrix();

    std::vector<TangentVector> tangents;
    std::vector<std::array<Complex, 3>> raw;
    for (const auto& a : basis) {
      lie::ComplexMatrix am = matrix_of(a);
      auto t = triple_of(sm * am - am * sm);
      raw.push_back(t);
      TangentVector tv(point, t, 1.0);
      report.max_tangency_residual = std::max(report.max_tangency_residual, tv.tangency_residual());
      tangents.push_back(tv);
    }
    for (std::size_t i = 0; i < tangents.size(); ++i)
      for (std::size_t j = i + 1; j < tangents.size(); ++j)
        report.max_omega = std::max(report.max_omega, std::abs(omega(tangents[i], tangents[j])));
    if (real_span_dimension(raw) != 2)
      report.spans_dimension_two = false;
    for (const auto& u : tangent_basis(point))
      report.min_taming = std::min(report.min_taming, omega(u, u.times_i()));
    ++report.samples;
  }
  report.pass = report.samples == n_samples && report.max_omega < tol && report.spans_dimension_two &&
                report.min_taming > 0.0 && report.max_tangency_residual < 1e-12;
  return report;
}

std::vector<std::array<Rational, 3>> rational_sphere_points(int max_numerator)
{
  std::vector<std::array<Rational, 3>> points;
  points.push_back({Rational(3, 5), Rational(4, 5), Rational(0)});
  for (int a = -max_numerator; a <= max_numerator; ++a)
    for (int b = -max_numerator; b <= max_numerator; ++b)
      for (int d = 1; d <= 2; ++d) {
        Rational u(a, d), v(b, d);
        u.canonicalize();
        v.canonicalize();
        Rational s = u * u + v * v;
        Rational den = s + 1;
        points.push_back({Rational(2 * u / den), Rational(2 * v / den), Rational((s - 1) / den)});
      }
  return points;
}

ExactSphereReport check_sphere_lagrangian_exact(const std::vector<std::array<Rational, 3>>& points)
{
  ExactSphereReport report;
  report.all_zero = true;
  report.max_abs_omega = 0;
  std::array<ExactMatrix, 3> basis{
      ExactMatrix{{GaussianRational::i(), 0}, {0, -GaussianRational::i()}},
      ExactMatrix{{0, 1}, {-1, 0}},
      ExactMatrix{{0, GaussianRational::i()}, {GaussianRational::i(), 0}},
  };
  for (const auto& [p, q, r] : points) {
    auto s = sphere_point_exact(p, q, r);
    ExactMatrix sm = lie::sl2_matrix(s[0], s[1], s[2]);
    std::vector<ExactTriple> tangents;
    ExactMatrix real_rows(3, 6);
    for (std::size_t k = 0; k < 3; ++k) {
      ExactMatrix c = commutator(sm, basis[k]);
      ExactTriple t{c(0, 0), c(0, 1), c(1, 0)};
      for (std::size_t j = 0; j < 3; ++j) {
        real_rows(k, 2 * j) = GaussianRational(t[j].re());
        real_rows(k, 2 * j + 1) = GaussianRational(t[j].im());
      }
      tangents.push_back(t);
    }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) {
        GaussianRational w = omega_exact(tangents[i], tangents[j]);
        if (!w.is_zero())
          report.all_zero = false;
        Rational a = abs(w.re());
        if (a > report.max_abs_omega)
          report.max_abs_omega = a;
      }
    if (real_rows.rank() != 2)
      report.spans_dimension_two = false;
    ++report.samples;
  }
  return report;
}

ThimbleSample thimble(double lambda, double t)
{
  if (!(lambda >= -1.0 && lambda <= 1.0))
    throw PreconditionError("thimble parameter lambda outside [-1,1]");
  if (!(t >= 0.0 && t < kTwoPi))
    throw PreconditionError("thimble angle outside [0, 2pi)");
  const double root = std::sqrt(1.0 - lambda * lambda);
  const Complex e = std::polar(1.0, t);
  return {lambda, t, {Complex(lambda, 0.0), e * root, std::conj(e) * root}};
}

std::pair<std::array<Complex, 3>, std::array<Complex, 3>> thimble_derivatives(double lambda, double t)
{
  if (!(std::abs(lambda) < 1.0))
    throw PreconditionError("thimble derivatives need |lambda| < 1");
  const double root = std::sqrt(1.0 - lambda * lambda);
  const Complex e = std::polar(1.0, t);
  const double droot = -lambda / root;
  std::array<Complex, 3> d_lambda{1.0, e * droot, std::conj(e) * droot};
  std::array<Complex, 3> d_t{0.0, kI * e * root, -kI * std::conj(e) * root};
  return {d_lambda, d_t};
}

double sphere_membership_residual(const OrbitPointSL2& point)
{
  const double r = point.x.real();
  const double p = -point.y.real();
  const double q = point.y.imag();
  const Complex z_expected(-p, -q);
  return std::max({std::abs(point.x.imag()), std::abs(point.z - z_expected), std::abs(p * p + q * q + r * r - 1.0)});
}

ThimbleSample matching_path_thimble(MatchingPath path, double s, double t)
{
  if (!(s >= 0.0 && s <= 1.0))
    throw PreconditionError("matching path parameter outside [0,1]");
  const double lambda = path == MatchingPath::Right ? 1.0 - s : s - 1.0;
  return thimble(lambda, t);
}

std::vector<double> default_thimble_lambdas()
{
  return {0.0, 0.25, -0.25, 0.5, -0.5, 0.75, -0.75, 0.99, -0.99};
}

ThimbleReport check_thimble_lagrangian(const std::vector<double>& lambdas, std::size_t t_samples, double tol)
{
  ThimbleReport report;
  for (double lambda : lambdas) {
    for (std::size_t k = 0; k < t_samples; ++k) {
      const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(t_samples);
      const ThimbleSample sample = thimble(lambda, t);
      const double height_residual = std::abs(2.0 * sample.point.x - 2.0 * lambda);
      report.max_fiber_residual =
          std::max({report.max_fiber_residual, height_residual, sample.point.orbit_residual()});
      const auto [d_lambda, d_t] = thimble_derivatives(lambda, t);
      TangentVector u(sample.point, d_lambda);
      TangentVector v(sample.point, d_t);
      report.max_omega = std::max(report.max_omega, std::abs(omega(u, v)));
      report.max_sphere_residual = std::max(report.max_sphere_residual, sphere_membership_residual(sample.point));
      ++report.samples;
    }
  }
  for (std::size_t k = 0; k < t_samples; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(t_samples);
    const auto left = matching_path_thimble(MatchingPath::Left, 1.0, t).point;
    const auto right = matching_path_thimble(MatchingPath::Right, 1.0, t).point;
    report.max_glue_residual = std::max(
        {report.max_glue_residual, std::abs(left.x - right.x), std::abs(left.y - right.y), std::abs(left.z - right.z)});
  }
  report.pass = report.samples > 0 && report.max_fiber_residual < 1e-12 && report.max_omega < tol &&
                report.max_sphere_residual < 1e-12 && report.max_glue_residual == 0.0;
  return report;
}

std::pair<Complex, double> fiber_to_cylinder(Complex y)
{
  const double modulus = std::abs(y);
  if (modulus == 0.0)
    throw PreconditionError("fiber_to_cylinder is undefined at y = 0");
  return {y / modulus, std::log(modulus)};
}

Complex cylinder_to_fiber(Complex unit, double s)
{
  return unit * std::exp(s);
}

} // namespace lg2::symplectic
