#include "isoformal/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace isoformal {

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace((unsigned char)c)) t += c;
  if (t.empty()) throw InputError("empty rational literal");
  size_t slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r(t);
      r.canonicalize();
      return r;
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (num.empty() || den.empty()) throw InputError("bad rational literal '" + s + "'");
    Rat r(num + "/" + den);
    if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("bad rational literal '" + s + "'");
  }
}

QVec parse_rat_vector(const std::string& body) {
  QVec out;
  std::string cur;
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || body[i] == ',') {
      if (cur.empty()) throw InputError("empty vector entry at offset " + std::to_string(i));
      out.push_back(parse_rat(cur));
      cur.clear();
    } else {
      cur += body[i];
    }
  }
  return out;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

std::string vec_str(const QVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return QMatrix(0, 0);
  QMatrix m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows; ++i) {
    if ((int)rows[i].size() != m.cols) throw InputError("ragged rows");
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_cols(const std::vector<QVec>& cols) {
  if (cols.empty()) return QMatrix(0, 0);
  QMatrix m((int)cols[0].size(), (int)cols.size());
  for (int j = 0; j < m.cols; ++j) {
    if ((int)cols[j].size() != m.rows) throw InputError("ragged columns");
    for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

QMatrix QMatrix::mul(const QMatrix& o) const {
  if (cols != o.rows) throw InputError("matrix dimension mismatch in mul");
  QMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

QVec QMatrix::apply(const QVec& v) const {
  if ((int)v.size() != cols) throw InputError("matrix/vector dimension mismatch");
  QVec r(rows, Rat(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

QVec QMatrix::row(int i) const {
  QVec r(cols);
  for (int j = 0; j < cols; ++j) r[j] = at(i, j);
  return r;
}

QVec QMatrix::col(int j) const {
  QVec r(rows);
  for (int i = 0; i < rows; ++i) r[i] = at(i, j);
  return r;
}

std::vector<QVec> QMatrix::col_list() const {
  std::vector<QVec> out;
  out.reserve(cols);
  for (int j = 0; j < cols; ++j) out.push_back(col(j));
  return out;
}

bool QMatrix::operator==(const QMatrix& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != o.a[i]) return false;
  return true;
}

bool QMatrix::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
  return true;
}

std::string QMatrix::key() const {
  std::string s = std::to_string(rows) + "x" + std::to_string(cols) + ":";
  for (const Rat& x : a) {
    s += x.get_str();
    s += ';';
  }
  return s;
}

RrefResult rref(const QMatrix& m) {
  RrefResult out;
  out.r = m;
  QMatrix& r = out.r;
  int lead = 0;
  for (int col = 0; col < r.cols && lead < r.rows; ++col) {
    int piv = -1;
    for (int i = lead; i < r.rows; ++i)
      if (r.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
    Rat inv = Rat(1) / r.at(lead, col);
    for (int j = col; j < r.cols; ++j)
      if (r.at(lead, j) != 0) r.at(lead, j) *= inv;
    for (int i = 0; i < r.rows; ++i) {
      if (i == lead) continue;
      Rat f = r.at(i, col);
      if (f == 0) continue;
      for (int j = col; j < r.cols; ++j)
        if (r.at(lead, j) != 0) r.at(i, j) -= f * r.at(lead, j);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = (int)out.pivots.size();
  return out;
}

std::vector<QVec> kernel_basis(const QMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (int freec = 0; freec < m.cols; ++freec) {
    if (is_pivot[freec]) continue;
    QVec v(m.cols, Rat(0));
    v[freec] = 1;
    for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.r.at(i, freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

QVec solve(const QMatrix& A, const QVec& b) {
  QMatrix aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  RrefResult rr = rref(aug);
  QVec x(A.cols, Rat(0));
  for (int i = 0; i < rr.rank; ++i) {
    int p = rr.pivots[i];
    if (p == A.cols) throw InputError("inconsistent linear system");
    x[p] = rr.r.at(i, A.cols);
  }
  return x;
}

QMatrix solve_matrix(const QMatrix& A, const QMatrix& B) {
  QMatrix X(A.cols, B.cols);
  for (int j = 0; j < B.cols; ++j) {
    QVec x = solve(A, B.col(j));
    for (int i = 0; i < A.cols; ++i) X.at(i, j) = x[i];
  }
  return X;
}

Rat dot(const QVec& x, const QVec& y) {
  if (x.size() != y.size()) throw InputError("dot dimension mismatch");
  Rat s(0);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) s += x[i] * y[i];
  return s;
}

QVec vadd(const QVec& x, const QVec& y) {
  QVec r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

QVec vsub(const QVec& x, const QVec& y) {
  QVec r(x);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

QVec vscale(const QVec& x, const Rat& c) {
  QVec r(x);
  for (auto& e : r) e *= c;
  return r;
}

bool is_zero_vec(const QVec& x) {
  for (const auto& e : x)
    if (e != 0) return false;
  return true;
}

QVec primitive(const QVec& x) {
  mpz_class den(1);
  for (const Rat& e : x) {
    mpz_class d = e.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  mpz_class num(0);
  QVec ints(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    mpz_class z = x[i].get_num() * (den / x[i].get_den());
    ints[i] = Rat(z);
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), z.get_mpz_t());
  }
  if (num == 0) return ints;  // zero vector
  for (auto& e : ints) e /= Rat(num);
  return ints;
}

int rank_of(const std::vector<QVec>& vectors) {
  if (vectors.empty()) return 0;
  return rref(QMatrix::from_rows(vectors)).rank;
}

std::vector<QVec> orthocomplement_in(const std::vector<QVec>& space,
                                     const std::vector<QVec>& killers) {
  if (space.empty()) return {};
  if (killers.empty()) return space;
  QMatrix constraints((int)killers.size(), (int)space.size());
  for (int i = 0; i < constraints.rows; ++i)
    for (int j = 0; j < constraints.cols; ++j)
      constraints.at(i, j) = dot(killers[i], space[j]);
  std::vector<QVec> coeffs = kernel_basis(constraints);
  std::vector<QVec> out;
  for (const QVec& c : coeffs) {
    QVec v(space[0].size(), Rat(0));
    for (size_t j = 0; j < space.size(); ++j)
      if (c[j] != 0) v = vadd(v, vscale(space[j], c[j]));
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const std::vector<QVec>& span_vecs, const QVec& v) {
  if (is_zero_vec(v)) return true;
  if (span_vecs.empty()) return false;
  std::vector<QVec> all = span_vecs;
  int r0 = rank_of(all);
  all.push_back(v);
  return rank_of(all) == r0;
}

}  // namespace isoformal
