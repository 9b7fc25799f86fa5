#include "sympms/matrix.hpp"

#include <algorithm>

namespace sympms {

RMatrix rmatrix_zero(Ring ring, int rows, int cols) {
  return RMatrix(ring, rows, cols, RingElement::zero(ring));
}

RMatrix rmatrix_identity(Ring ring, int n) {
  RMatrix m = rmatrix_zero(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RingElement::one(ring);
  return m;
}

RMatrix rmatrix_from_cols(Ring ring, const std::vector<RVec>& cols) {
  if (cols.empty()) return rmatrix_zero(ring, 0, 0);
  int rows = static_cast<int>(cols[0].size());
  RMatrix m = rmatrix_zero(ring, rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(cols[c].size()) != rows)
      throw DomainError("bad-shape", "ragged column list");
    m.set_col(c, cols[c]);
  }
  return m;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("bad-shape", "matrix product shape mismatch");
  RMatrix out = rmatrix_zero(a.ring(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const RingElement& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("bad-shape", "matrix sum shape mismatch");
  RMatrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) += b.at(i, j);
  return out;
}

RMatrix operator-(const RMatrix& a) {
  RMatrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = -out.at(i, j);
  return out;
}

RMatrix transpose(const RMatrix& m) {
  RMatrix out = rmatrix_zero(m.ring(), m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(j, i) = m.at(i, j);
  return out;
}

RVec mat_vec(const RMatrix& m, const RVec& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw DomainError("bad-shape", "matrix-vector shape mismatch");
  RVec out(m.rows(), RingElement::zero(m.ring()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

RVec vec_add(const RVec& a, const RVec& b) {
  RVec out = a;
  for (size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

RVec vec_sub(const RVec& a, const RVec& b) {
  RVec out = a;
  for (size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

RVec vec_scale(const RingElement& c, const RVec& v) {
  RVec out = v;
  for (auto& x : out) x = c * x;
  return out;
}

bool vec_is_zero(const RVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RingElement det(const RMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("non-square", "determinant of non-square matrix");
  const int n = m.rows();
  const Ring ring = m.ring();
  if (n == 0) return RingElement::one(ring);
  RMatrix a = m;
  RingElement prev = RingElement::one(ring);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!a.at(i, k).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return RingElement::zero(ring);
    if (p != k) {
      for (int j = k; j < n; ++j) std::swap(a.at(p, j), a.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = exact_div(a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j), prev);
      a.at(i, k) = RingElement::zero(ring);
    }
    prev = a.at(k, k);
  }
  RingElement d = a.at(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

int rank(const RMatrix& m) {
  RMatrix a = m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    for (int i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, c).is_zero()) continue;
      RingElement pivot = a.at(r, c), lead = a.at(i, c);
      for (int j = 0; j < a.cols(); ++j)
        a.at(i, j) = pivot * a.at(i, j) - lead * a.at(r, j);
    }
    ++r;
  }
  return r;
}

namespace {

struct SnfWork {
  RMatrix a, u, v, u_inv;

  explicit SnfWork(const RMatrix& m)
      : a(m),
        u(rmatrix_identity(m.ring(), m.rows())),
        v(rmatrix_identity(m.ring(), m.cols())),
        u_inv(rmatrix_identity(m.ring(), m.rows())) {}

  void row_addmul(int i, int t, const RingElement& c) {
    // row_i += c * row_t on a and u; u_inv takes the inverse as a column op
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) += c * a.at(t, j);
    for (int j = 0; j < u.cols(); ++j) u.at(i, j) += c * u.at(t, j);
    for (int r = 0; r < u_inv.rows(); ++r) u_inv.at(r, t) -= c * u_inv.at(r, i);
  }

  void row_swap(int i, int t) {
    if (i == t) return;
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(i, j), a.at(t, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(i, j), u.at(t, j));
    for (int r = 0; r < u_inv.rows(); ++r) std::swap(u_inv.at(r, i), u_inv.at(r, t));
  }

  void row_scale(int i, const RingElement& unit) {
    RingElement inv = unit_inverse(unit);
    for (int j = 0; j < a.cols(); ++j) a.at(i, j) = unit * a.at(i, j);
    for (int j = 0; j < u.cols(); ++j) u.at(i, j) = unit * u.at(i, j);
    for (int r = 0; r < u_inv.rows(); ++r) u_inv.at(r, i) = inv * u_inv.at(r, i);
  }

  void col_addmul(int j, int t, const RingElement& c) {
    for (int i = 0; i < a.rows(); ++i) a.at(i, j) += c * a.at(i, t);
    for (int i = 0; i < v.rows(); ++i) v.at(i, j) += c * v.at(i, t);
  }

  void col_swap(int j, int t) {
    if (j == t) return;
    for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, j), a.at(i, t));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, j), v.at(i, t));
  }
};

}  // namespace

SmithResult smith_normal_form(const RMatrix& m) {
  SnfWork w(m);
  const Ring ring = m.ring();
  const int steps = std::min(m.rows(), m.cols());

  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // re-pick the minimal-norm entry as pivot each round; quotients then
      // stay small and entries cannot blow up across rounds
      int pi = -1, pj = -1;
      Zint best;
      for (int i = t; i < w.a.rows(); ++i)
        for (int j = t; j < w.a.cols(); ++j) {
          if (w.a.at(i, j).is_zero()) continue;
          Zint n = norm(w.a.at(i, j));
          if (pi < 0 || n < best) {
            pi = i;
            pj = j;
            best = n;
          }
        }
      if (pi < 0) break;
      w.row_swap(pi, t);
      w.col_swap(pj, t);

      bool clean = true;
      for (int i = t + 1; i < w.a.rows(); ++i) {
        if (w.a.at(i, t).is_zero()) continue;
        DivRem d = div_rem(w.a.at(i, t), w.a.at(t, t));
        w.row_addmul(i, t, -d.quotient);
        if (!w.a.at(i, t).is_zero()) clean = false;
      }
      for (int j = t + 1; j < w.a.cols(); ++j) {
        if (w.a.at(t, j).is_zero()) continue;
        DivRem d = div_rem(w.a.at(t, j), w.a.at(t, t));
        w.col_addmul(j, t, -d.quotient);
        if (!w.a.at(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      bool fixed = false;
      for (int i = t + 1; i < w.a.rows() && !fixed; ++i)
        for (int j = t + 1; j < w.a.cols() && !fixed; ++j) {
          if (w.a.at(i, j).is_zero()) continue;
          if (!try_exact_div(w.a.at(i, j), w.a.at(t, t))) {
            w.row_addmul(t, i, RingElement::one(ring));
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    if (w.a.at(t, t).is_zero()) break;
  }

  SmithResult out{std::vector<RingElement>{}, w.u, w.v, w.u_inv};
  for (int t = 0; t < steps; ++t) {
    if (w.a.at(t, t).is_zero()) break;
    auto [canon, unit] = canonical_associate(w.a.at(t, t));
    if (!unit.is_one()) w.row_scale(t, unit);
    out.divisors.push_back(canon);
  }
  out.U = w.u;
  out.U_inv = w.u_inv;
  out.V = w.v;
  return out;
}

Zint lattice_index(const Lattice& l) {
  if (l.generators.rows() != l.ambient_rank)
    throw DomainError("bad-shape", "lattice generators do not match ambient rank");
  return index_of_columns(l.generators);
}

Zint index_of_columns(const RMatrix& generators) {
  SmithResult s = smith_normal_form(generators);
  if (static_cast<int>(s.divisors.size()) < generators.cols()) return 0;
  Zint out = 1;
  for (const auto& d : s.divisors) out *= norm(d);
  return out;
}

SaturatePairResult saturate_pair(const RVec& w, const RVec& w_prime) {
  if (w.size() != w_prime.size() || w.empty())
    throw DomainError("bad-shape", "saturate_pair needs two vectors of equal length");
  const Ring ring = w[0].ring();
  RMatrix m = rmatrix_from_cols(ring, {w, w_prime});
  if (rank(m) < 2) throw DomainError("dependence", "saturate_pair of dependent vectors");
  SmithResult s = smith_normal_form(m);
  SaturatePairResult out{s.U_inv.col(0), s.U_inv.col(1), rmatrix_zero(ring, 2, 2)};
  RMatrix um = s.U * m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.coords.at(i, j) = um.at(i, j);
  return out;
}

RingElement vector_content(const RVec& v) {
  if (vec_is_zero(v)) throw DomainError("zero-vector", "content of the zero vector");
  RingElement g = RingElement::zero(v[0].ring());
  bool have = false;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = have ? gcd(g, x) : canonical_associate(x).first;
    have = true;
    if (is_unit(g)) break;
  }
  return canonical_associate(g).first;
}

bool is_primitive(const RVec& v) { return is_unit(vector_content(v)); }

PrimitivePart make_primitive(const RVec& v) {
  RingElement c = vector_content(v);
  RVec out = v;
  for (auto& x : out) x = exact_div(x, c);
  return {out, c};
}

QMatrix qmatrix_from_ring(const RMatrix& m) {
  QMatrix out(m.ring(), m.rows(), m.cols(), FieldElement(m.ring()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out.at(i, j) = FieldElement::integral(m.at(i, j));
  return out;
}

QMatrix rref(const QMatrix& m) {
  QMatrix a = m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    FieldElement inv = FieldElement::integral(RingElement::one(a.ring())) / a.at(r, c);
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) = inv * a.at(r, j);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      FieldElement lead = a.at(i, c);
      for (int j = 0; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - lead * a.at(r, j);
    }
    ++r;
  }
  return a;
}

int rank(const QMatrix& m) {
  QMatrix a = rref(m);
  int r = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!a.at(i, j).is_zero()) {
        ++r;
        break;
      }
  return r;
}

}  // namespace sympms
