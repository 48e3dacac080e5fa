#pragma once

#include <map>

#include "isoformal/linalg.hpp"

namespace isoformal {

using Expo = std::vector<int>;

// Monomial order used everywhere: ascending total degree, then lexicographic
// descending exponent vector. For two variables at degree 2 this lists
// x^2, xy, y^2.
struct GradedLexLess {
  bool operator()(const Expo& a, const Expo& b) const;
};

// Sparse multivariate polynomial over Q. No zero coefficients are stored.
struct MultiPoly {
  int nvars = 0;
  std::map<Expo, Rat, GradedLexLess> terms;

  explicit MultiPoly(int n = 0) : nvars(n) {}
  static MultiPoly constant(int n, const Rat& c);
  static MultiPoly variable(int n, int i, int power = 1);
  static MultiPoly linear(const QVec& coeffs);

  bool is_zero() const { return terms.empty(); }
  void add_term(const Expo& e, const Rat& c);

  MultiPoly plus(const MultiPoly& o) const;
  MultiPoly minus(const MultiPoly& o) const;
  MultiPoly times(const MultiPoly& o) const;
  MultiPoly times_scalar(const Rat& c) const;
  MultiPoly pow(int k) const;

  // Common total degree of all terms; -1 if inhomogeneous; 0 for the zero
  // polynomial.
  int homogeneous_degree() const;
  int total_degree() const;  // max term degree, 0 for zero
  Rat eval(const QVec& point) const;
  MultiPoly partial(int var) const;
  bool operator==(const MultiPoly& o) const {
    return nvars == o.nvars && terms == o.terms;
  }
  std::string str() const;
};

// All exponent vectors of the given total degree, in the fixed order above.
// Count is C(nvars + degree - 1, degree).
std::vector<Expo> monomial_basis(int nvars, int degree);

unsigned long long binomial(unsigned long long n, unsigned long long k);

// f in n variables composed with the linear parameterization x = L y, where L
// is n x k; the result is a polynomial in the k new variables.
MultiPoly substitute_linear(const MultiPoly& f, const QMatrix& L);

}  // namespace isoformal
