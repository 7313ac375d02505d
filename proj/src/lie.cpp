#include "lg2/lie.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "lg2/errors.hpp"

namespace lg2::lie {

CartanDiagonal::CartanDiagonal(std::vector<double> entries) : entries_(std::move(entries))
{
  if (entries_.empty())
    throw PreconditionError("Cartan element needs at least one entry");
  double sum = std::accumulate(entries_.begin(), entries_.end(), 0.0);
  double scale = 1.0;
  for (double e : entries_)
    scale = std::max(scale, std::abs(e));
  if (std::abs(sum) > 1e-12 * scale)
    throw PreconditionError("Cartan element is not traceless");
  std::vector<double> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  regular_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

ComplexMatrix CartanDiagonal::matrix() const
{
  return diagonal_matrix(entries_);
}

ComplexMatrix diagonal_matrix(const std::vector<double>& diag)
{
  const auto n = static_cast<Eigen::Index>(diag.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    m(i, i) = diag[static_cast<std::size_t>(i)];
  return m;
}

std::complex<double> trace_form(const ComplexMatrix& a, const ComplexMatrix& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw PreconditionError("trace form needs square matrices of equal size");
  return (a * b).trace();
}

GaussianRational trace_form(const ExactMatrix& a, const ExactMatrix& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw PreconditionError("trace form needs square matrices of equal size");
  return (a * b).trace();
}

std::complex<double> height(const CartanDiagonal& h, const ComplexMatrix& a)
{
  return trace_form(h.matrix(), a);
}

GaussianRational height(const ExactMatrix& h, const ExactMatrix& a)
{
  return trace_form(h, a);
}

ComplexMatrix OrbitPointSL2::matrix() const
{
  ComplexMatrix m(2, 2);
  m << x, y, z, -x;
  return m;
}

double OrbitPointSL2::orbit_residual() const
{
  return std::abs(x * x + y * z - 1.0);
}

ExactMatrix sl2_matrix(const GaussianRational& x, const GaussianRational& y, const GaussianRational& z)
{
  return ExactMatrix{{x, y}, {z, -x}};
}

namespace {

bool lex_less(const std::complex<double>& a, const std::complex<double>& b)
{
  if (a.real() != b.real())
    return a.real() < b.real();
  return a.imag() < b.imag();
}

} // namespace

bool orbit_contains(const CartanDiagonal& h0, const ComplexMatrix& a, double tol)
{
  const auto n = static_cast<Eigen::Index>(h0.n());
  if (a.rows() != n || a.cols() != n)
    return false;
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, false);
  if (solver.info() != Eigen::Success)
    return false;
  std::vector<std::complex<double>> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::vector<std::complex<double>> target(h0.entries().begin(), h0.entries().end());
  std::sort(eig.begin(), eig.end(), lex_less);
  std::sort(target.begin(), target.end(), lex_less);
  for (std::size_t i = 0; i < eig.size(); ++i)
    if (std::abs(eig[i] - target[i]) > tol)
      return false;
  return true;
}

bool orbit_contains(const std::vector<Rational>& h0, const ExactMatrix& a)
{
  if (a.rows() != h0.size() || a.cols() != h0.size())
    return false;
  std::vector<GaussianRational> diag(h0.begin(), h0.end());
  return a.characteristic_polynomial() == ExactMatrix::diagonal(diag).characteristic_polynomial();
}

namespace {

void require_matching(const CartanDiagonal& h0, const CartanDiagonal& h)
{
  if (h0.n() != h.n())
    throw PreconditionError("H0 and H have different sizes");
  if (!h.regular())
    throw PreconditionError("H is not regular");
}

std::size_t factorial(std::size_t k)
{
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i)
    f *= i;
  return f;
}

} // namespace

std::vector<std::vector<double>> critical_points(const CartanDiagonal& h0, const CartanDiagonal& h)
{
  require_matching(h0, h);
  std::vector<std::size_t> perm(h0.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<double>> seen;
  std::vector<std::vector<double>> points;
  do {
    std::vector<double> d(h0.n());
    for (std::size_t i = 0; i < perm.size(); ++i)
      d[i] = h0.entries()[perm[i]];
    if (seen.insert(d).second)
      points.push_back(std::move(d));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return points;
}

std::size_t critical_count(const CartanDiagonal& h0, const CartanDiagonal& h)
{
  require_matching(h0, h);
  std::map<double, std::size_t> multiplicity;
  for (double e : h0.entries())
    ++multiplicity[e];
  std::size_t count = factorial(h0.n());
  for (const auto& [value, m] : multiplicity)
    count /= factorial(m);
  return count;
}

namespace {

using ChartFunction = std::function<std::complex<double>(const std::vector<std::complex<double>>&)>;

ComplexMatrix central_hessian(const ChartFunction& f, std::size_t dim, double h)
{
  ComplexMatrix hess(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  std::vector<std::complex<double>> zero(dim, 0.0);
  const std::complex<double> f0 = f(zero);
  auto shifted = [&](std::size_t a, double da, std::size_t b, double db) {
    std::vector<std::complex<double>> p(dim, 0.0);
    p[a] += da;
    p[b] += db;
    return f(p);
  };
  for (std::size_t a = 0; a < dim; ++a) {
    const auto ia = static_cast<Eigen::Index>(a);
    hess(ia, ia) = (shifted(a, h, a, 0.0) - 2.0 * f0 + shifted(a, -h, a, 0.0)) / (h * h);
    for (std::size_t b = a + 1; b < dim; ++b) {
      const auto ib = static_cast<Eigen::Index>(b);
      std::complex<double> v =
          (shifted(a, h, b, h) - shifted(a, h, b, -h) - shifted(a, -h, b, h) + shifted(a, -h, b, -h)) /
          (4.0 * h * h);
      hess(ia, ib) = v;
      hess(ib, ia) = v;
    }
  }
  return hess;
}

} // namespace

HessianResult hessian_at_critical_point(const CartanDiagonal& h0, const CartanDiagonal& h,
                                        const std::vector<double>& point, const HessianOptions& options)
{
  const auto candidates = critical_points(h0, h);
  if (std::find(candidates.begin(), candidates.end(), point) == candidates.end())
    throw PreconditionError("point is not a critical point of the height function");

  HessianResult result;
  const std::size_t n = h0.n();
  if (n == 2) {
    const double x0 = point[0];
    if (std::abs(x0) < 1e-8)
      throw DiagnosticError("square-root chart degenerates at x = 0");
    const std::complex<double> k = h.entries()[0];
    const double x0_sq = x0 * x0;
    ChartFunction f = [&](const std::vector<std::complex<double>>& c) {
      std::complex<double> x = x0 * std::sqrt(1.0 - c[0] * c[1] / x0_sq);
      return 2.0 * k * x;
    };
    result.chart = "sl2 graph chart x = x0*sqrt(1 - yz/x0^2), coordinates (y,z)";
    result.hessian = central_hessian(f, 2, options.step);
  } else {
    std::vector<std::pair<std::size_t, std::size_t>> roots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && point[i] != point[j])
          roots.emplace_back(i, j);
    if (roots.empty())
      throw DiagnosticError("orbit is a single point; no chart");
    const ComplexMatrix p = diagonal_matrix(point);
    const ComplexMatrix hm = h.matrix();
    ChartFunction f = [&](const std::vector<std::complex<double>>& c) {
      ComplexMatrix zm = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
      for (std::size_t r = 0; r < roots.size(); ++r)
        zm(static_cast<Eigen::Index>(roots[r].first), static_cast<Eigen::Index>(roots[r].second)) = c[r];
      ComplexMatrix g = zm.exp();
      ComplexMatrix gi = (-zm).exp();
      return (hm * g * p * gi).trace();
    };
    result.chart = "exponential chart over " + std::to_string(roots.size()) + " root directions";
    result.hessian = central_hessian(f, roots.size(), options.step);
  }
  result.determinant = result.hessian.determinant();
  result.nondegenerate = std::abs(result.determinant) > options.tolerance;
  return result;
}

bool hessian_nondegenerate(const CartanDiagonal& h0, const CartanDiagonal& h, const std::vector<double>& point,
                           const HessianOptions& options)
{
  return hessian_at_critical_point(h0, h, point, options).nondegenerate;
}

std::complex<double> directional_derivative(const CartanDiagonal& h, const ComplexMatrix& a,
                                            const ComplexMatrix& z, double step)
{
  auto value = [&](double s) {
    ComplexMatrix g = (s * z).exp();
    ComplexMatrix gi = (-s * z).exp();
    return height(h, g * a * gi);
  };
  return (value(step) - value(-step)) / (2.0 * step);
}

} // namespace lg2::lie
