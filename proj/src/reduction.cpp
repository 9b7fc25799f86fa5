#include "sympms/reduction.hpp"

#include <algorithm>

namespace sympms {

namespace {

SymplecticSpace link_space(const SymplecticSpace& s) {
  return SymplecticSpace{s.n - 1, s.ring};
}

RMatrix central_block(const RMatrix& m) {
  const int d = m.rows();
  RMatrix out = rmatrix_zero(m.ring(), d - 2, d - 2);
  for (int i = 0; i < d - 2; ++i)
    for (int j = 0; j < d - 2; ++j) out.at(i, j) = m.at(i + 1, j + 1);
  return out;
}

std::string zstr(const Zint& z) { return z.get_str(); }

}  // namespace

LinkData build_link(const SymplecticSymbol& upper, const RVec& x) {
  const SymplecticSpace& sp = upper.space();
  const int d = sp.dim();
  if (sp.n < 2)
    throw DomainError("bad-index", "link construction needs n >= 2");
  if (upper.is_zero())
    throw DomainError("degenerate-symbol", "link of a degenerate symbol");
  const RMatrix& m = upper.matrix();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < i; ++j)
      if (!m.at(i, j).is_zero())
        throw DomainError("not-triangular", "link base must be upper triangular");
  for (int i = 0; i < d; ++i)
    if (!(i == 0 ? m.at(i, 0).is_one() : m.at(i, 0).is_zero()))
      throw DomainError("not-triangular", "link base must have first column e1");

  RingElement x_pair_v1 = sym_pair(sp, x, m.col(0));
  if (x_pair_v1.is_zero())
    throw DomainError("index-in-dx", "link needs <x, v_1> != 0");

  SubdivisionData data = subdivision(upper, x);
  RMatrix X = rmatrix_zero(sp.ring, d, d - 2);
  for (int p = 1; p < d - 1; ++p) {
    int j = pos_to_index(sp, p);
    X.set_col(p - 1, data.point(1, j));
  }

  RVec e1(d, RingElement::zero(sp.ring));
  e1[0] = RingElement::one(sp.ring);
  RMatrix W = rmatrix_zero(sp.ring, d, d - 2);
  for (int p = 1; p < d - 1; ++p) {
    RVec ej(d, RingElement::zero(sp.ring));
    ej[p] = RingElement::one(sp.ring);
    RVec wj = vec_sub(vec_scale(sym_pair(sp, ej, x), e1),
                      vec_scale(sym_pair(sp, e1, x), ej));
    W.set_col(p - 1, wj);
  }

  RMatrix m_prime = central_block(m);
  if (X != W * m_prime)
    throw std::logic_error("build_link: X = W m' factorization failed");
  return LinkData{upper, x, X, W, m_prime};
}

SymplecticSymbol lift_link_term(const LinkData& link, const RMatrix& m_alpha_prime,
                                int sign) {
  const SymplecticSpace& sp = link.base.space();
  const int d = sp.dim();
  RMatrix wa = link.W * m_alpha_prime;
  RMatrix m = rmatrix_zero(sp.ring, d, d);
  m.at(0, 0) = RingElement::one(sp.ring);
  for (int c = 0; c < d - 2; ++c) m.set_col(c + 1, wa.col(c));
  m.set_col(d - 1, link.x);
  return normalize(SymplecticSymbol(sp, m, sign));
}

std::vector<SymplecticSymbol> saturate_link_pairs(const SymplecticSymbol& lifted,
                                                  TraceNode* trace) {
  const SymplecticSpace& sp = lifted.space();
  const int d = sp.dim();
  std::vector<SymplecticSymbol> work = {normalize(lifted)};
  for (int p = 1; p < sp.n; ++p) {  // middle pairs, 0-based positions (p, d-1-p)
    std::vector<SymplecticSymbol> next;
    for (const SymplecticSymbol& s : work) {
      RVec c = s.matrix().col(p), cb = s.matrix().col(d - 1 - p);
      RingElement pairing = sym_pair(sp, c, cb);
      if (pairing.is_zero())
        throw std::logic_error("saturate_link_pairs: degenerate middle pair");
      if (norm(pairing) == 1) {
        next.push_back(s);
        continue;
      }
      SaturatePairResult sat = saturate_pair(c, cb);
      RVec ta = sat.coords.col(0), tb = sat.coords.col(1);
      Sl2Symbol coords{sp.ring, ta, tb, 1};
      auto path = reduce_sl2(coords);
      if (trace != nullptr) {
        TraceNode node;
        node.kind = "pair-saturation";
        node.info["pair"] = std::to_string(p + 1);
        node.info["terms"] = std::to_string(path.size());
        node.transform = sat.coords;
        trace->children.push_back(std::move(node));
      }
      RMatrix basis = rmatrix_from_cols(sp.ring, {sat.basis_a, sat.basis_b});
      for (const auto& t : path) {
        RMatrix m = s.matrix();
        m.set_col(p, mat_vec(basis, t.v));
        m.set_col(d - 1 - p, mat_vec(basis, t.w));
        next.push_back(normalize(SymplecticSymbol(sp, m, s.sign() * t.sign)));
      }
    }
    work = std::move(next);
  }
  return work;
}

namespace {

// arrange the base so the distinguished index lands at position 1 and its
// bar (which receives x) at the last position
SymplecticSymbol arrange_front(const SymplecticSymbol& s, int index) {
  SymplecticSymbol out = s;
  int k = index;
  if (k < 0) {
    out = swap_bar(out, -k);
    k = -k;
  }
  if (k != 1) {
    std::vector<int> tau(s.space().n);
    for (int i = 0; i < s.space().n; ++i) tau[i] = i + 1;
    std::swap(tau[0], tau[k - 1]);
    out = permute(out, tau);
  }
  return out;
}

std::vector<SymplecticSymbol> reduce_base_case(const SymplecticSymbol& s,
                                               TraceNode* trace) {
  const SymplecticSpace& sp = s.space();
  Sl2Symbol pair{sp.ring, s.matrix().col(0), s.matrix().col(1), s.sign()};
  auto path = reduce_sl2(pair);
  if (trace != nullptr) {
    TraceNode node;
    node.kind = "base-case";
    node.info["terms"] = std::to_string(path.size());
    trace->children.push_back(std::move(node));
  }
  std::vector<SymplecticSymbol> out;
  out.reserve(path.size());
  for (const auto& t : path)
    out.push_back(normalize(SymplecticSymbol(
        sp, rmatrix_from_cols(sp.ring, {t.v, t.w}), t.sign)));
  return out;
}

std::vector<SymplecticSymbol> reduce_worklist(const SymplecticSymbol& s0,
                                              std::vector<TraceNode>& steps);

// one depth-lowering pass over a symbol of depth > 1, n >= 2
std::vector<SymplecticSymbol> reduce_pass(const SymplecticSymbol& s,
                                          const Zint& depth_in, TraceNode& pass) {
  const SymplecticSpace& sp = s.space();
  Candidate cand = find_candidate(s);
  {
    TraceNode node;
    node.kind = "candidate";
    node.candidate = cand;
    pass.children.push_back(std::move(node));
  }

  RelationResult rel = theorem1_relation_full(s, cand.x);
  {
    TraceNode node;
    node.kind = "relation";
    node.info["terms"] = std::to_string(rel.term_indices.size());
    node.info["dropped"] = std::to_string(rel.dropped_degenerate.size());
    node.subdivision = subdivision(s, cand.x);
    pass.children.push_back(std::move(node));
  }

  std::vector<SymplecticSymbol> out;
  for (int idx : rel.term_indices) {
    SymplecticSymbol arranged = arrange_front(s, idx);
    auto hnf = symplectic_hnf(sp, arranged.matrix());

    // first column of the triangularized base is unit * e1; make it e1
    RMatrix tri = hnf.t;
    RingElement lead = tri.at(0, 0);
    if (!is_unit(lead))
      throw std::logic_error("reduce: triangularized first column not a unit multiple of e1");
    if (!lead.is_one()) tri.set_col(0, vec_scale(unit_inverse(lead), tri.col(0)));
    SymplecticSymbol upper(sp, tri, arranged.sign());

    RVec x2 = mat_vec(hnf.gamma, cand.x);
    LinkData link = build_link(upper, x2);

    TraceNode link_node;
    link_node.kind = "link-recursion";
    link_node.info["term"] = std::to_string(idx);
    link_node.gamma = hnf.gamma;

    SymplecticSymbol small = normalize(
        SymplecticSymbol(link_space(sp), link.m_prime, 1));
    std::vector<SymplecticSymbol> sub = reduce_worklist(small, link_node.children);

    RMatrix gamma_inv = sp_inverse(sp, hnf.gamma);
    for (const SymplecticSymbol& st : sub) {
      auto uc = is_unimodular(st);
      if (!uc.unimodular)
        throw std::logic_error("reduce: link recursion returned a non-unimodular term");
      SymplecticSymbol lifted =
          lift_link_term(link, uc.sp_member, upper.sign() * st.sign());
      for (const SymplecticSymbol& sat : saturate_link_pairs(lifted, &link_node)) {
        SymplecticSymbol final_term = normalize(left_mul(gamma_inv, sat));
        Zint dep = depth(sp, final_term.matrix());
        if (dep >= depth_in)
          throw std::logic_error("reduce: depth did not decrease (guard)");
        out.push_back(std::move(final_term));
      }
    }
    pass.children.push_back(std::move(link_node));
  }
  return out;
}

std::vector<SymplecticSymbol> reduce_worklist(const SymplecticSymbol& s0,
                                              std::vector<TraceNode>& steps) {
  const SymplecticSpace& sp = s0.space();
  std::vector<SymplecticSymbol> output;
  std::vector<SymplecticSymbol> current = {normalize(s0)};
  std::optional<Zint> prev_depth;
  int generation = 0;

  while (!current.empty()) {
    std::vector<SymplecticSymbol> next;
    std::optional<Zint> max_depth;
    for (const SymplecticSymbol& t : current) {
      Zint dep = depth(sp, t.matrix());
      if (dep > 1 && (!max_depth || dep > *max_depth)) max_depth = dep;
    }
    if (max_depth) {
      if (prev_depth && *max_depth >= *prev_depth)
        throw std::logic_error("reduce: outer iteration depth failed to decrease");
      prev_depth = max_depth;
      TraceNode pass;
      pass.kind = "pass";
      pass.info["generation"] = std::to_string(generation);
      pass.info["max_depth"] = zstr(*max_depth);
      pass.info["symbols"] = std::to_string(current.size());

      for (const SymplecticSymbol& t : current) {
        auto uc = is_unimodular(t);
        if (uc.unimodular) {
          output.push_back(t);
          continue;
        }
        if (sp.n == 1) {
          auto terms = reduce_base_case(t, &pass);
          next.insert(next.end(), terms.begin(), terms.end());
          continue;
        }
        Zint dep = depth(sp, t.matrix());
        auto terms = reduce_pass(t, dep, pass);
        next.insert(next.end(), terms.begin(), terms.end());
      }
      steps.push_back(std::move(pass));
    } else {
      for (const SymplecticSymbol& t : current) output.push_back(t);
    }
    current = std::move(next);
    ++generation;
  }
  return output;
}

}  // namespace

ReduceResult reduce(const SymplecticSymbol& s) {
  ReduceResult out{SignedRelation{s.space(), {}}, {}};
  SymplecticSymbol start = normalize(s);
  if (start.is_zero()) {
    TraceNode node;
    node.kind = "note";
    node.info["degenerate-input"] = "zero class, empty relation";
    out.trace.steps.push_back(std::move(node));
    return out;
  }
  out.relation.terms = reduce_worklist(start, out.trace.steps);
  sort_terms(out.relation);
  return out;
}

}  // namespace sympms
