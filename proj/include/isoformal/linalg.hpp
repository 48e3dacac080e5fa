#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace isoformal {

// All scalar arithmetic in this library is exact rational arithmetic.
using Rat = mpq_class;
using QVec = std::vector<Rat>;

// Malformed user input (specs, vectors, corpus files). CLI exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded. CLI exit code 3.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat parse_rat(const std::string& s);  // "n" or "n/d", d > 0 after canonicalizing
QVec parse_rat_vector(const std::string& body);  // "1,2,-3/2"
std::string rat_str(const Rat& x);
std::string vec_str(const QVec& v);

// Dense row-major rational matrix.
struct QMatrix {
  int rows = 0, cols = 0;
  QVec a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), Rat(0)) {}

  Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<QVec>& rows);
  static QMatrix from_cols(const std::vector<QVec>& cols);

  QMatrix mul(const QMatrix& o) const;
  QVec apply(const QVec& v) const;  // M v
  QMatrix transpose() const;
  QVec row(int i) const;
  QVec col(int j) const;
  std::vector<QVec> col_list() const;
  bool operator==(const QMatrix& o) const;
  bool is_identity() const;
  std::string key() const;  // canonical string, usable as a hash key
};

struct RrefResult {
  QMatrix r;
  int rank = 0;
  std::vector<int> pivots;
};

// Reduced row echelon form over Q.
RrefResult rref(const QMatrix& m);

// Basis of the right null space, derived from the rref staircase; count =
// cols - rank. The basis is canonical given the fixed elimination order.
std::vector<QVec> kernel_basis(const QMatrix& m);

// x with A x = b; throws InputError if the system is inconsistent.
QVec solve(const QMatrix& A, const QVec& b);
// X with A X = B, column by column.
QMatrix solve_matrix(const QMatrix& A, const QMatrix& B);

Rat dot(const QVec& x, const QVec& y);
QVec vadd(const QVec& x, const QVec& y);
QVec vsub(const QVec& x, const QVec& y);
QVec vscale(const QVec& x, const Rat& c);
bool is_zero_vec(const QVec& x);

// Integer vector proportional to x with gcd of entries 1. The sign of x is
// preserved (the first nonzero entry keeps its sign).
QVec primitive(const QVec& x);

int rank_of(const std::vector<QVec>& vectors);

// {x in span(space) : dot(k, x) = 0 for all k in killers}, as a basis.
std::vector<QVec> orthocomplement_in(const std::vector<QVec>& space,
                                     const std::vector<QVec>& killers);

// true iff v lies in the span of the given vectors
bool in_span(const std::vector<QVec>& span_vecs, const QVec& v);

}  // namespace isoformal
