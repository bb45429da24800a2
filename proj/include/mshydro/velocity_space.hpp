#pragma once

// Exact algebra of the Maxwell-molecule eigenfunctions of the linearized
// collision operator. Polynomials live in the two commuting symbols c_x and
// c^2 = c_x^2 + c_y^2 + c_z^2; Gaussian moments are taken under the unit
// Maxwellian f_M = (2 pi)^{-3/2} exp(-c^2 / 2).

#include <compare>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mshydro {

/// Exact rational backed by 1024-bit checked integers; arithmetic that would
/// exceed the width throws std::overflow_error instead of wrapping.
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<
    boost::multiprecision::cpp_int_backend<1024, 1024, boost::multiprecision::signed_magnitude,
                                           boost::multiprecision::checked, void>>>;

std::string to_string(const Rational& value);
double to_double(const Rational& value);

/// Exponent pair of the monomial c_x^cx (c^2)^csq.
struct Exponent {
  unsigned cx = 0;
  unsigned csq = 0;

  auto operator<=>(const Exponent&) const = default;
};

class VelocityPolynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  VelocityPolynomial() = default;

  static VelocityPolynomial constant(const Rational& value);
  static VelocityPolynomial monomial(unsigned cx, unsigned csq, const Rational& coefficient = Rational(1));

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(unsigned cx, unsigned csq) const;

  /// Highest power of |c| appearing, i.e. max(cx + 2 csq); -1 for the zero polynomial.
  int degree() const;

  /// Evaluate at a velocity with given c_x and c^2 (floating point, for quadrature).
  double evaluate(double cx, double csq) const;

  VelocityPolynomial& operator+=(const VelocityPolynomial& other);
  VelocityPolynomial& operator-=(const VelocityPolynomial& other);
  VelocityPolynomial& operator*=(const Rational& scale);

  friend VelocityPolynomial operator+(VelocityPolynomial lhs, const VelocityPolynomial& rhs) { return lhs += rhs; }
  friend VelocityPolynomial operator-(VelocityPolynomial lhs, const VelocityPolynomial& rhs) { return lhs -= rhs; }
  friend VelocityPolynomial operator*(VelocityPolynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend VelocityPolynomial operator*(const Rational& lhs, VelocityPolynomial rhs) { return rhs *= lhs; }
  friend VelocityPolynomial operator*(const VelocityPolynomial& lhs, const VelocityPolynomial& rhs);
  friend VelocityPolynomial operator-(VelocityPolynomial p) { return p *= Rational(-1); }

  friend bool operator==(const VelocityPolynomial&, const VelocityPolynomial&) = default;

 private:
  void accumulate(const Exponent& e, const Rational& c);

  Terms terms_;
};

std::string to_string(const VelocityPolynomial& p);

/// Labels follow the (r, l) indices of the Maxwell-molecule eigenfunctions.
/// One, Cx and CsqHalf are the collision invariants 1, c_x, c^2/2.
enum class EigenfunctionId { Psi01, Psi02, Psi11, Psi03, Psi20, Psi12, One, Cx, CsqHalf };

const char* to_string(EigenfunctionId id);

/// E[c_x^a (c^2)^b] under the unit 3-D Gaussian; zero for odd a.
/// Throws std::overflow_error if the exact value exceeds the rational width.
Rational monomial_moment(unsigned a, unsigned b);

VelocityPolynomial psi_poly(EigenfunctionId id);

/// Gaussian inner product  integral f_M p q dc, computed exactly by bilinearity.
Rational inner(const VelocityPolynomial& p, const VelocityPolynomial& q);

enum class Recursion { Stress, Heat };

/// Stress:  c_x psi02 - (psi03 + 8/15 psi11 + 4/3 c_x)
/// Heat:    c_x psi11 - (psi12 + psi02 + 2/3 psi20 + 5/3 (c^2/2 - 3/2))
/// Both are identically zero.
VelocityPolynomial recursion_residual(Recursion which);

}  // namespace mshydro
