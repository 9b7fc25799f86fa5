#include "sympms/subdivision.hpp"

#include <algorithm>

namespace sympms {

namespace {

RingElement det_with_column(const RMatrix& m, int col, const RVec& v) {
  RMatrix a = m;
  a.set_col(col, v);
  return det(a);
}

}  // namespace

Candidate find_candidate(const SymplecticSymbol& s, int w_skip) {
  const SymplecticSpace& sp = s.space();
  const int d = sp.dim();
  if (s.is_zero())
    throw DomainError("degenerate-symbol", "candidate for dependent columns");
  const RMatrix& m = s.matrix();
  for (int c = 0; c < d; ++c)
    if (!is_primitive(m.col(c)))
      throw DomainError("imprimitive-column", "candidate needs primitive columns");

  RingElement det_a = det(m);
  if (norm(det_a) <= 1)
    throw DomainError("index-one", "no candidate exists at index <= 1");

  // first standard basis vector outside the column lattice
  int chosen = -1;
  for (int j = w_skip; j < d; ++j) {
    RVec e(d, RingElement::zero(sp.ring));
    e[j] = RingElement::one(sp.ring);
    bool inside = true;
    for (int i = 0; i < d && inside; ++i)
      if (!try_exact_div(det_with_column(m, i, e), det_a)) inside = false;
    if (!inside) {
      chosen = j;
      break;
    }
  }
  if (chosen < 0)
    throw DomainError("no-candidate-w",
                      "every scanned basis vector lies in the column lattice");

  RVec w(d, RingElement::zero(sp.ring));
  w[chosen] = RingElement::one(sp.ring);

  RVec x = w;
  for (int i = 0; i < d; ++i) {
    RingElement alpha = div_rem(det_with_column(m, i, w), det_a).quotient;
    if (!alpha.is_zero()) x = vec_sub(x, vec_scale(alpha, m.col(i)));
  }
  if (vec_is_zero(x)) throw std::logic_error("find_candidate: x vanished");
  x = make_primitive(x).vector;

  Candidate out{x, {}, {}};
  const Zint bound = norm(det_a);
  for (int i = 0; i < d; ++i) {
    RingElement di = det_with_column(m, i, x);
    Zint w_i = norm(di);
    if (w_i >= bound)
      throw std::logic_error("find_candidate: witness index did not drop");
    out.witness_indices.push_back(w_i);
    out.coefficients.emplace_back(di, det_a);  // Cramer coordinate of x
  }
  bool some_nonzero = false;
  for (const auto& q : out.coefficients) {
    if (!q.norm_lt_one()) throw std::logic_error("find_candidate: coefficient norm >= 1");
    if (!q.is_zero()) some_nonzero = true;
  }
  if (!some_nonzero) throw std::logic_error("find_candidate: all coefficients vanished");
  return out;
}

bool SubdivisionData::in_d_x(int index) const {
  return std::find(d_x.begin(), d_x.end(), index) != d_x.end();
}

bool SubdivisionData::defined(int i, int j) const {
  if (i == j || i == bar(j)) return false;
  return !(in_d_x(i) && in_d_x(j));
}

const RVec& SubdivisionData::point(int i, int j) const {
  auto it = points.find({index_to_pos(base.space(), i), index_to_pos(base.space(), j)});
  if (it == points.end())
    throw DomainError("undefined-point", "x_ij undefined for this index pair");
  return it->second;
}

SubdivisionData subdivision(const SymplecticSymbol& s, const RVec& x) {
  const SymplecticSpace& sp = s.space();
  if (static_cast<int>(x.size()) != sp.dim())
    throw DomainError("dimension-mismatch", "x must have length 2n");
  if (vec_is_zero(x)) throw DomainError("zero-x", "subdivision needs x != 0");
  if (s.is_zero())
    throw DomainError("degenerate-symbol", "subdivision of a zero symbol");

  SubdivisionData out{s, x, {}, {}};
  std::vector<RingElement> pairings(sp.dim(), RingElement::zero(sp.ring));
  for (int p = 0; p < sp.dim(); ++p) {
    pairings[p] = sym_pair(sp, x, s.matrix().col(p));
    if (pairings[p].is_zero()) out.d_x.push_back(pos_to_index(sp, p));
  }
  for (int p = 0; p < sp.dim(); ++p)
    for (int q = 0; q < sp.dim(); ++q) {
      if (p == q || q == sp.dim() - 1 - p) continue;
      if (pairings[p].is_zero() && pairings[q].is_zero()) continue;
      RVec pt = vec_sub(vec_scale(pairings[p], s.matrix().col(q)),
                        vec_scale(pairings[q], s.matrix().col(p)));
      out.points.emplace(std::make_pair(p, q), std::move(pt));
    }
  return out;
}

SymplecticSymbol make_m_i(const SubdivisionData& data, int index) {
  const SymplecticSpace& sp = data.base.space();
  if (data.in_d_x(index))
    throw DomainError("index-in-dx", "m_i requires an index outside D_x");
  RMatrix m = data.base.matrix();
  m.set_col(index_to_pos(sp, bar(index)), data.x);
  for (int p = 0; p < sp.dim(); ++p) {
    int j = pos_to_index(sp, p);
    if (j == index || j == bar(index)) continue;
    m.set_col(p, data.point(index, j));
  }
  return normalize(SymplecticSymbol(sp, m, data.base.sign()));
}

RelationResult theorem1_relation_full(const SymplecticSymbol& s, const RVec& x) {
  SubdivisionData data = subdivision(s, x);
  RelationResult out{SignedRelation{s.space(), {}}, {}, {}};
  for (int idx : all_indices(s.space())) {
    if (data.in_d_x(idx)) continue;
    SymplecticSymbol term = make_m_i(data, idx);
    if (term.is_zero()) {
      out.dropped_degenerate.push_back(idx);
      continue;
    }
    out.relation.terms.push_back(term);
    out.term_indices.push_back(idx);
  }
  return out;
}

SignedRelation theorem1_relation(const SymplecticSymbol& s, const RVec& x) {
  return theorem1_relation_full(s, x).relation;
}

bool check_collinearity(const SubdivisionData& data, int i, int j, int k) {
  // {i, j, k} isotropic, pairwise distinct, at most one inside D_x
  if (i == j || j == k || i == k || i == bar(j) || j == bar(k) || i == bar(k))
    throw DomainError("bad-index", "collinearity needs an isotropic triple");
  int inside = (data.in_d_x(i) ? 1 : 0) + (data.in_d_x(j) ? 1 : 0) +
               (data.in_d_x(k) ? 1 : 0);
  if (inside > 1)
    throw DomainError("index-in-dx", "collinearity allows at most one index in D_x");
  const SymplecticSpace& sp = data.space();
  auto pairing = [&](int idx) {
    return sym_pair(sp, data.x, data.base.matrix().col(index_to_pos(sp, idx)));
  };
  RVec lhs = vec_scale(pairing(k), data.point(i, j));
  RVec rhs = vec_sub(vec_scale(pairing(j), data.point(i, k)),
                     vec_scale(pairing(i), data.point(j, k)));
  return lhs == rhs;
}

}  // namespace sympms
