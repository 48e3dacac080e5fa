#include "isoformal/poly.hpp"

#include <algorithm>
#include <numeric>

namespace isoformal {

bool GradedLexLess::operator()(const Expo& a, const Expo& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  // lexicographic descending within a degree: x^2 < xy < y^2 in map order
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(int n, const Rat& c) {
  MultiPoly p(n);
  if (c != 0) p.terms[Expo(n, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int n, int i, int power) {
  MultiPoly p(n);
  Expo e(n, 0);
  e[i] = power;
  p.terms[e] = 1;
  return p;
}

MultiPoly MultiPoly::linear(const QVec& coeffs) {
  MultiPoly p((int)coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Expo e(coeffs.size(), 0);
    e[i] = 1;
    p.terms[e] = coeffs[i];
  }
  return p;
}

void MultiPoly::add_term(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

MultiPoly MultiPoly::plus(const MultiPoly& o) const {
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::minus(const MultiPoly& o) const {
  MultiPoly r(*this);
  for (const auto& [e, c] : o.terms) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::times(const MultiPoly& o) const {
  MultiPoly r(nvars);
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      Expo e(nvars);
      for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::times_scalar(const Rat& c) const {
  MultiPoly r(nvars);
  if (c == 0) return r;
  for (const auto& [e, v] : terms) r.terms[e] = v * c;
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  MultiPoly r = MultiPoly::constant(nvars, 1);
  MultiPoly base(*this);
  while (k > 0) {
    if (k & 1) r = r.times(base);
    k >>= 1;
    if (k) base = base.times(base);
  }
  return r;
}

int MultiPoly::homogeneous_degree() const {
  if (terms.empty()) return 0;
  int d = -1;
  for (const auto& [e, c] : terms) {
    int deg = std::accumulate(e.begin(), e.end(), 0);
    if (d == -1)
      d = deg;
    else if (d != deg)
      return -1;
  }
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

Rat MultiPoly::eval(const QVec& point) const {
  Rat s(0);
  for (const auto& [e, c] : terms) {
    Rat t = c;
    for (int i = 0; i < nvars; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::partial(int var) const {
  MultiPoly r(nvars);
  for (const auto& [e, c] : terms) {
    if (e[var] == 0) continue;
    Expo e2 = e;
    e2[var] -= 1;
    r.add_term(e2, c * e[var]);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    for (int i = 0; i < nvars; ++i) {
      if (e[i] == 0) continue;
      s += "*x" + std::to_string(i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

static void enumerate_monomials(int nvars, int degree, int pos, Expo& cur,
                                std::vector<Expo>& out) {
  if (pos == nvars - 1) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int k = degree; k >= 0; --k) {
    cur[pos] = k;
    enumerate_monomials(nvars, degree - k, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

std::vector<Expo> monomial_basis(int nvars, int degree) {
  std::vector<Expo> out;
  if (nvars == 0) {
    if (degree == 0) out.push_back(Expo{});
    return out;
  }
  Expo cur(nvars, 0);
  enumerate_monomials(nvars, degree, 0, cur, out);
  return out;
}

unsigned long long binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long r = 1;
  for (unsigned long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

MultiPoly substitute_linear(const MultiPoly& f, const QMatrix& L) {
  if (L.rows != f.nvars) throw InputError("substitute_linear: row count must match nvars");
  int k = L.cols;
  // powers of each substituted variable, built on demand
  std::vector<std::vector<MultiPoly>> powers(f.nvars);
  for (int i = 0; i < f.nvars; ++i)
    powers[i].push_back(MultiPoly::constant(k, 1));
  auto var_power = [&](int i, int p) -> const MultiPoly& {
    while ((int)powers[i].size() <= p) {
      if (powers[i].size() == 1) {
        QVec row = L.row(i);
        powers[i].push_back(MultiPoly::linear(row));
      } else {
        powers[i].push_back(powers[i].back().times(powers[i][1]));
      }
    }
    return powers[i][p];
  };
  MultiPoly out(k);
  for (const auto& [e, c] : f.terms) {
    MultiPoly t = MultiPoly::constant(k, c);
    for (int i = 0; i < f.nvars; ++i)
      if (e[i] > 0) t = t.times(var_power(i, e[i]));
    out = out.plus(t);
  }
  return out;
}

}  // namespace isoformal
