#ifndef LG2_LIE_HPP
#define LG2_LIE_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lg2/exact_matrix.hpp"

namespace lg2::lie {

using ComplexMatrix = Eigen::MatrixXcd;

/// Traceless real diagonal element of sl(n). The regular flag is set when
/// all entries are pairwise distinct.
class CartanDiagonal {
public:
  /// Throws PreconditionError if the entries do not sum to zero.
  explicit CartanDiagonal(std::vector<double> entries);

  std::size_t n() const { return entries_.size(); }
  const std::vector<double>& entries() const { return entries_; }
  bool regular() const { return regular_; }
  ComplexMatrix matrix() const;

private:
  std::vector<double> entries_;
  bool regular_ = false;
};

ComplexMatrix diagonal_matrix(const std::vector<double>& diag);

/// <A,B> := tr(AB). This is the pairing used throughout; the Killing form
/// is a constant multiple of it.
std::complex<double> trace_form(const ComplexMatrix& a, const ComplexMatrix& b);
GaussianRational trace_form(const ExactMatrix& a, const ExactMatrix& b);

/// f_H(A) = tr(H A).
std::complex<double> height(const CartanDiagonal& h, const ComplexMatrix& a);
GaussianRational height(const ExactMatrix& h, const ExactMatrix& a);

/// Point (x,y,z) of the sl(2) orbit x^2 + yz = 1, matrix [[x,y],[z,-x]].
struct OrbitPointSL2 {
  std::complex<double> x, y, z;

  ComplexMatrix matrix() const;
  /// |x^2 + yz - 1|
  double orbit_residual() const;
};

ExactMatrix sl2_matrix(const GaussianRational& x, const GaussianRational& y, const GaussianRational& z);

/// Eigenvalue multiset of A equals the entries of H0 within tol, after
/// sorting both lexicographically by (re, im).
bool orbit_contains(const CartanDiagonal& h0, const ComplexMatrix& a, double tol = 1e-9);

/// Exact regime: characteristic polynomial of A equals that of diag(h0).
/// For n = 2 and h0 = diag(1,-1) this is exactly x^2 + yz = 1.
bool orbit_contains(const std::vector<Rational>& h0, const ExactMatrix& a);

/// Critical points of f_H on the orbit of H0 for diagonal data: the
/// distinct permutations of H0's diagonal, each returned as a diagonal.
/// Throws PreconditionError unless H is regular and sizes agree.
std::vector<std::vector<double>> critical_points(const CartanDiagonal& h0, const CartanDiagonal& h);

/// n! / prod(multiplicity!) over the distinct entries of H0.
std::size_t critical_count(const CartanDiagonal& h0, const CartanDiagonal& h);

struct HessianOptions {
  double step = 1e-4;
  double tolerance = 1e-6;
};

struct HessianResult {
  std::string chart;
  ComplexMatrix hessian;
  std::complex<double> determinant;
  bool nondegenerate = false;
};

/// Complex Hessian of f_H in a local holomorphic chart of the orbit at a
/// critical point, by second-order central differences.
///
/// sl(2): the graph chart x = x0 sqrt(1 - yz / x0^2) in coordinates (y,z).
/// sl(n), n > 2: the chart Z -> exp(Z) P exp(-Z) with Z spanned by the
/// root vectors E_ij whose entries of P differ.
/// Nondegenerate iff |det| > options.tolerance.
HessianResult hessian_at_critical_point(const CartanDiagonal& h0, const CartanDiagonal& h,
                                        const std::vector<double>& point, const HessianOptions& options = {});

bool hessian_nondegenerate(const CartanDiagonal& h0, const CartanDiagonal& h, const std::vector<double>& point,
                           const HessianOptions& options = {});

/// d/ds f_H(exp(sZ) A exp(-sZ)) at s = 0, central difference.
std::complex<double> directional_derivative(const CartanDiagonal& h, const ComplexMatrix& a,
                                            const ComplexMatrix& z, double step = 1e-5);

} // namespace lg2::lie

#endif
