#include "mshydro/velocity_space.hpp"

#include <cmath>
#include <sstream>

namespace mshydro {

namespace {

// (2m - 1)!! = E[x^{2m}] for a unit normal variable.
Rational gaussian_even_moment(unsigned m) {
  Rational r(1);
  for (unsigned j = 1; j <= m; ++j) r *= Rational(2 * j - 1);
  return r;
}

Rational factorial(unsigned n) {
  Rational r(1);
  for (unsigned j = 2; j <= n; ++j) r *= Rational(j);
  return r;
}

Rational frac(long num, long den) { return Rational(num) / Rational(den); }

}  // namespace

std::string to_string(const Rational& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

VelocityPolynomial VelocityPolynomial::constant(const Rational& value) { return monomial(0, 0, value); }

VelocityPolynomial VelocityPolynomial::monomial(unsigned cx, unsigned csq, const Rational& coefficient) {
  VelocityPolynomial p;
  p.accumulate({cx, csq}, coefficient);
  return p;
}

Rational VelocityPolynomial::coefficient(unsigned cx, unsigned csq) const {
  auto it = terms_.find({cx, csq});
  return it == terms_.end() ? Rational(0) : it->second;
}

int VelocityPolynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.cx + 2 * e.csq));
  return d;
}

double VelocityPolynomial::evaluate(double cx, double csq) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) sum += to_double(c) * std::pow(cx, e.cx) * std::pow(csq, e.csq);
  return sum;
}

void VelocityPolynomial::accumulate(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

VelocityPolynomial& VelocityPolynomial::operator+=(const VelocityPolynomial& other) {
  for (const auto& [e, c] : other.terms_) accumulate(e, c);
  return *this;
}

VelocityPolynomial& VelocityPolynomial::operator-=(const VelocityPolynomial& other) {
  for (const auto& [e, c] : other.terms_) accumulate(e, -c);
  return *this;
}

VelocityPolynomial& VelocityPolynomial::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scale;
  return *this;
}

VelocityPolynomial operator*(const VelocityPolynomial& lhs, const VelocityPolynomial& rhs) {
  VelocityPolynomial out;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.accumulate({e1.cx + e2.cx, e1.csq + e2.csq}, c1 * c2);
  return out;
}

std::string to_string(const VelocityPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    if (e.cx) os << "*cx^" << e.cx;
    if (e.csq) os << "*c2^" << e.csq;
  }
  return os.str();
}

const char* to_string(EigenfunctionId id) {
  switch (id) {
    case EigenfunctionId::Psi01: return "psi01";
    case EigenfunctionId::Psi02: return "psi02";
    case EigenfunctionId::Psi11: return "psi11";
    case EigenfunctionId::Psi03: return "psi03";
    case EigenfunctionId::Psi20: return "psi20";
    case EigenfunctionId::Psi12: return "psi12";
    case EigenfunctionId::One: return "one";
    case EigenfunctionId::Cx: return "cx";
    case EigenfunctionId::CsqHalf: return "csq_half";
  }
  return "?";
}

Rational monomial_moment(unsigned a, unsigned b) {
  if (a % 2 == 1) return Rational(0);
  // (c^2)^b = sum over i+j+l=b of multinomial * c_x^{2i} c_y^{2j} c_z^{2l}; the three
  // components are independent unit normals.
  const Rational b_fact = factorial(b);
  Rational sum(0);
  for (unsigned i = 0; i <= b; ++i) {
    const Rational mx = gaussian_even_moment(a / 2 + i);
    for (unsigned j = 0; i + j <= b; ++j) {
      const unsigned l = b - i - j;
      sum += b_fact / (factorial(i) * factorial(j) * factorial(l)) * mx * gaussian_even_moment(j) *
             gaussian_even_moment(l);
    }
  }
  return sum;
}

VelocityPolynomial psi_poly(EigenfunctionId id) {
  using P = VelocityPolynomial;
  switch (id) {
    case EigenfunctionId::Psi01:
      return P::monomial(0, 1) + P::constant(frac(-3, 2));
    case EigenfunctionId::Psi02:
      return P::monomial(2, 0) + P::monomial(0, 1, frac(-1, 3));
    case EigenfunctionId::Psi11:
      return P::monomial(1, 1, frac(1, 2)) + P::monomial(1, 0, frac(-5, 2));
    case EigenfunctionId::Psi03:
      return P::monomial(3, 0) + P::monomial(1, 1, frac(-3, 5));
    case EigenfunctionId::Psi20:
      return P::constant(frac(15, 4)) + P::monomial(0, 1, frac(-5, 2)) + P::monomial(0, 2, frac(1, 4));
    case EigenfunctionId::Psi12:
      return psi_poly(EigenfunctionId::Psi02) * (P::monomial(0, 1, frac(1, 2)) + P::constant(frac(-7, 2)));
    case EigenfunctionId::One:
      return P::constant(Rational(1));
    case EigenfunctionId::Cx:
      return P::monomial(1, 0);
    case EigenfunctionId::CsqHalf:
      return P::monomial(0, 1, frac(1, 2));
  }
  return {};
}

Rational inner(const VelocityPolynomial& p, const VelocityPolynomial& q) {
  Rational sum(0);
  for (const auto& [e1, c1] : p.terms())
    for (const auto& [e2, c2] : q.terms()) sum += c1 * c2 * monomial_moment(e1.cx + e2.cx, e1.csq + e2.csq);
  return sum;
}

VelocityPolynomial recursion_residual(Recursion which) {
  using P = VelocityPolynomial;
  const P cx = psi_poly(EigenfunctionId::Cx);
  if (which == Recursion::Stress) {
    return cx * psi_poly(EigenfunctionId::Psi02) -
           (psi_poly(EigenfunctionId::Psi03) + frac(8, 15) * psi_poly(EigenfunctionId::Psi11) + frac(4, 3) * cx);
  }
  const P energy = P::monomial(0, 1, frac(1, 2)) + P::constant(frac(-3, 2));
  return cx * psi_poly(EigenfunctionId::Psi11) -
         (psi_poly(EigenfunctionId::Psi12) + psi_poly(EigenfunctionId::Psi02) +
          frac(2, 3) * psi_poly(EigenfunctionId::Psi20) + frac(5, 3) * energy);
}

}  // namespace mshydro
