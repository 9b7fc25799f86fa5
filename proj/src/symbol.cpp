#include "sympms/symbol.hpp"

#include <algorithm>

namespace sympms {

SymplecticSymbol::SymplecticSymbol(SymplecticSpace space, RMatrix columns, int sign)
    : space_(space), cols_(std::move(columns)), sign_(sign), zero_(false) {
  const int d = space_.dim();
  if (cols_.rows() != d || cols_.cols() != d)
    throw DomainError("dimension-mismatch", "symbol needs 2n columns of length 2n");
  if (sign_ != 1 && sign_ != -1)
    throw DomainError("bad-sign", "symbol sign must be +1 or -1");
  for (int c = 0; c < d; ++c)
    if (vec_is_zero(cols_.col(c)))
      throw DomainError("zero-column", "symbol columns must be nonzero");
  if (!isotropy_condition(space_, cols_))
    throw DomainError("isotropy-violation", "symbol columns violate the isotropy condition");
  zero_ = rank(cols_) < d;
}

SymplecticSymbol normalize(const SymplecticSymbol& s) {
  RMatrix m = s.matrix();
  const int d = s.space().dim();
  for (int c = 0; c < d; ++c) {
    RVec col = make_primitive(m.col(c)).vector;
    for (const auto& x : col) {
      if (x.is_zero()) continue;
      RingElement u = canonical_associate(x).second;
      if (!u.is_one()) col = vec_scale(u, col);
      break;
    }
    m.set_col(c, col);
  }
  return SymplecticSymbol(s.space(), m, s.sign());
}

bool is_normalized(const SymplecticSymbol& s) {
  return s == normalize(s);
}

SymplecticSymbol permute(const SymplecticSymbol& s, const std::vector<int>& tau) {
  const SymplecticSpace& sp = s.space();
  if (static_cast<int>(tau.size()) != sp.n)
    throw DomainError("bad-index", "permutation must act on 1..n");
  RMatrix m = s.matrix();
  for (int k = 1; k <= sp.n; ++k) {
    int t = tau[k - 1];
    if (t < 1 || t > sp.n) throw DomainError("bad-index", "permutation image out of range");
    m.set_col(index_to_pos(sp, k), s.column(t));
    m.set_col(index_to_pos(sp, -k), s.column(-t));
  }
  // The hyperoctahedral action on the top homology of the cross-polytope
  // boundary has degree sgn(tau) on pair permutations (and -1 on each bar
  // swap), so the stored sign picks up sgn(tau); the chamber chain of the
  // signed symbol is then invariant.  The boundary-zero oracle pins this.
  int sgn = 1;
  for (size_t i = 0; i < tau.size(); ++i)
    for (size_t j = i + 1; j < tau.size(); ++j)
      if (tau[i] > tau[j]) sgn = -sgn;
  return SymplecticSymbol(sp, m, sgn * s.sign());
}

SymplecticSymbol swap_bar(const SymplecticSymbol& s, int k) {
  const SymplecticSpace& sp = s.space();
  if (k < 1 || k > sp.n) throw DomainError("bad-index", "swap_bar index out of range");
  RMatrix m = s.matrix();
  m.set_col(index_to_pos(sp, k), s.column(-k));
  m.set_col(index_to_pos(sp, -k), s.column(k));
  return SymplecticSymbol(sp, m, -s.sign());
}

SymplecticSymbol left_mul(const RMatrix& g, const SymplecticSymbol& s) {
  return SymplecticSymbol(s.space(), g * s.matrix(), s.sign());
}

UnimodularCheck is_unimodular(const SymplecticSymbol& s) {
  if (s.is_zero())
    throw DomainError("degenerate-symbol", "unimodularity of a zero symbol");
  const SymplecticSpace& sp = s.space();
  const int d = sp.dim();
  RMatrix m = s.matrix();
  for (int c = 0; c < d; ++c)
    if (!is_primitive(m.col(c)))
      throw DomainError("imprimitive-column", "unimodularity needs a normalized symbol");
  UnimodularCheck out{true, m};
  for (int p = 0; p < sp.n; ++p) {
    RingElement pr = sym_pair(sp, m.col(p), m.col(d - 1 - p));
    if (norm(pr) != 1) {
      out.unimodular = false;
      return out;
    }
    // scale the barred column so the pairing becomes exactly 1
    out.sp_member.set_col(d - 1 - p,
                          vec_scale(unit_inverse(pr), out.sp_member.col(d - 1 - p)));
  }
  return out;
}

std::string symbol_sort_key(const SymplecticSymbol& s) {
  std::string key;
  const RMatrix& m = s.matrix();
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r) {
      key += m.at(r, c).a().get_str();
      key += ',';
      key += m.at(r, c).b().get_str();
      key += ';';
    }
  key += s.sign() > 0 ? '+' : '-';
  return key;
}

void sort_terms(SignedRelation& rel) {
  std::stable_sort(rel.terms.begin(), rel.terms.end(),
                   [](const SymplecticSymbol& a, const SymplecticSymbol& b) {
                     return symbol_sort_key(a) < symbol_sort_key(b);
                   });
}

RingElement sl2_det(const Sl2Symbol& s) {
  return s.v[0] * s.w[1] - s.v[1] * s.w[0];
}

namespace {

RingElement det2(const RVec& a, const RVec& b) {
  return a[0] * b[1] - a[1] * b[0];
}

void check_sl2_input(const Sl2Symbol& s) {
  if (s.v.size() != 2 || s.w.size() != 2)
    throw DomainError("dimension-mismatch", "rank-2 symbol needs vectors of length 2");
  if (vec_is_zero(s.v) || vec_is_zero(s.w))
    throw DomainError("zero-column", "rank-2 symbol needs nonzero vectors");
  if (!is_primitive(s.v) || !is_primitive(s.w))
    throw DomainError("imprimitive-column", "rank-2 symbol needs primitive vectors");
  if (det2(s.v, s.w).is_zero())
    throw DomainError("dependence", "rank-2 reduction of dependent vectors");
}

// continued-fraction path over Z
std::vector<Sl2Symbol> reduce_sl2_cf(const Sl2Symbol& s) {
  const Ring ring = s.ring;
  if (norm(sl2_det(s)) == 1) return {s};

  // T v = e1 with T in SL_2(Z); v primitive makes the gcd exactly 1
  Zint g, r, t;
  mpz_gcdext(g.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), s.v[0].a().get_mpz_t(),
             s.v[1].a().get_mpz_t());
  Zint T00 = r, T01 = t, T10 = -s.v[1].a(), T11 = s.v[0].a();
  // inverse of [[T00, T01], [T10, T11]] with det 1
  Zint I00 = T11, I01 = -T01, I10 = -T10, I11 = T00;

  Zint p = T00 * s.w[0].a() + T01 * s.w[1].a();
  Zint q = T10 * s.w[0].a() + T11 * s.w[1].a();
  if (q < 0) {
    p = -p;
    q = -q;
  }

  // convergents of p/q, floor quotients
  std::vector<std::pair<Zint, Zint>> conv;
  Zint hm2 = 0, hm1 = 1, km2 = 1, km1 = 0;
  Zint num = p, den = q;
  while (den != 0) {
    Zint a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Zint h = a * hm1 + hm2, k = a * km1 + km2;
    conv.emplace_back(h, k);
    Zint rem = num - a * den;
    num = den;
    den = rem;
    hm2 = hm1;
    hm1 = h;
    km2 = km1;
    km1 = k;
  }

  auto back = [&](const Zint& x, const Zint& y) {
    return RVec{RingElement(ring, I00 * x + I01 * y),
                RingElement(ring, I10 * x + I11 * y)};
  };

  std::vector<Sl2Symbol> out;
  RVec prev = back(1, 0);
  for (const auto& [h, k] : conv) {
    RVec cur = back(h, k);
    out.push_back(Sl2Symbol{ring, prev, cur, s.sign});
    prev = cur;
  }
  return out;
}

// first standard basis vector outside the lattice spanned by (v, w)
RVec sl2_scan_w(Ring ring, const RVec& v, const RVec& w, const RingElement& d) {
  for (int j = 0; j < 2; ++j) {
    RVec e(2, RingElement::zero(ring));
    e[j] = RingElement::one(ring);
    // e in L  iff  both Cramer coordinates are integral
    RingElement c1 = det2(e, w), c2 = det2(v, e);
    if (try_exact_div(c1, d) && try_exact_div(c2, d)) continue;
    return e;
  }
  throw std::logic_error("sl2_scan_w: no basis vector outside an index > 1 lattice");
}

std::vector<Sl2Symbol> reduce_sl2_cand_rec(const Sl2Symbol& s) {
  if (norm(sl2_det(s)) == 1) return {s};
  RVec x = sl2_candidate(s.ring, s.v, s.w);
  std::vector<Sl2Symbol> out;
  if (!det2(s.v, x).is_zero()) {
    auto left = reduce_sl2_cand_rec(Sl2Symbol{s.ring, s.v, x, s.sign});
    out.insert(out.end(), left.begin(), left.end());
  }
  if (!det2(x, s.w).is_zero()) {
    auto right = reduce_sl2_cand_rec(Sl2Symbol{s.ring, x, s.w, s.sign});
    out.insert(out.end(), right.begin(), right.end());
  }
  return out;
}

}  // namespace

RVec sl2_candidate(Ring ring, const RVec& v, const RVec& w) {
  RingElement d = det2(v, w);
  Zint nd = norm(d);
  if (nd <= 1)
    throw DomainError("index-one", "no candidate needed for index <= 1");

  RVec pick = sl2_scan_w(ring, v, w, d);
  // alpha_i from euclidean division of det A_i[pick] by det A
  RingElement d1 = det2(pick, w);  // column 1 replaced
  RingElement d2 = det2(v, pick);  // column 2 replaced
  RingElement a1 = div_rem(d1, d).quotient;
  RingElement a2 = div_rem(d2, d).quotient;
  RVec x = vec_sub(pick, vec_add(vec_scale(a1, v), vec_scale(a2, w)));
  if (vec_is_zero(x)) throw std::logic_error("sl2_candidate: x vanished");
  x = make_primitive(x).vector;
  if (norm(det2(x, w)) >= nd || norm(det2(v, x)) >= nd)
    throw std::logic_error("sl2_candidate: witness index did not drop");
  return x;
}

std::vector<Sl2Symbol> reduce_sl2_by_candidates(const Sl2Symbol& s) {
  check_sl2_input(s);
  return reduce_sl2_cand_rec(s);
}

std::vector<Sl2Symbol> reduce_sl2(const Sl2Symbol& s) {
  check_sl2_input(s);
  if (s.ring == Ring::Z) return reduce_sl2_cf(s);
  return reduce_sl2_cand_rec(s);
}

}  // namespace sympms
