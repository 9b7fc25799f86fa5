#include "sympms/io.hpp"
#include <algorithm>

namespace sympms {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed input: " + what);
}

}  // namespace

json zint_to_json(const Zint& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

Zint zint_from_json(const json& j) {
  if (j.is_number_integer()) return Zint(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return Zint(j.get<std::string>());
  malformed("integer expected");
}

json ring_element_to_json(const RingElement& x) {
  return json::array({zint_to_json(x.a()), zint_to_json(x.b())});
}

RingElement ring_element_from_json(Ring ring, const json& j) {
  if (!j.is_array() || j.empty() || j.size() > 2)
    malformed("ring element must be [a] or [a, b]");
  Zint a = zint_from_json(j[0]);
  Zint b = j.size() == 2 ? zint_from_json(j[1]) : Zint(0);
  return RingElement(ring, a, b);
}

json field_element_to_json(const FieldElement& q) {
  json out = json::object();
  out["num"] = ring_element_to_json(q.num());
  out["den"] = ring_element_to_json(q.den());
  return out;
}

FieldElement field_element_from_json(Ring ring, const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    malformed("field element must be {num, den}");
  return FieldElement(ring_element_from_json(ring, j["num"]),
                      ring_element_from_json(ring, j["den"]));
}

json vector_to_json(const RVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(ring_element_to_json(x));
  return out;
}

RVec vector_from_json(Ring ring, const json& j) {
  if (!j.is_array()) malformed("vector must be an array");
  RVec out;
  for (const auto& e : j) out.push_back(ring_element_from_json(ring, e));
  return out;
}

json matrix_to_json(const RMatrix& m) {
  json out = json::object();
  out["ring"] = ring_tag(m.ring());
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(ring_element_to_json(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  out["entries"] = std::move(entries);
  return out;
}

RMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("rows") ||
      !j.contains("cols") || !j.contains("entries"))
    malformed("matrix must be {ring, rows, cols, entries}");
  Ring ring = ring_from_tag(j["ring"].get<std::string>());
  int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
  if (rows < 0 || cols < 0) malformed("matrix dimensions must be non-negative");
  const json& entries = j["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    malformed("matrix entries must have `rows` rows");
  RMatrix out = rmatrix_zero(ring, rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      malformed("matrix row has the wrong length");
    for (int c = 0; c < cols; ++c) out.at(i, c) = ring_element_from_json(ring, row[c]);
  }
  return out;
}

json space_to_json(const SymplecticSpace& s) {
  json out = json::object();
  out["n"] = s.n;
  out["ring"] = ring_tag(s.ring);
  return out;
}

SymplecticSpace space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("ring"))
    malformed("space must be {n, ring}");
  int n = j["n"].get<int>();
  if (n < 1) malformed("n must be positive");
  return SymplecticSpace{n, ring_from_tag(j["ring"].get<std::string>())};
}

json symbol_to_json(const SymplecticSymbol& s) {
  json out = json::object();
  out["ring"] = ring_tag(s.space().ring);
  out["n"] = s.space().n;
  out["sign"] = s.sign();
  json cols = json::array();
  for (int c = 0; c < s.space().dim(); ++c)
    cols.push_back(vector_to_json(s.matrix().col(c)));
  out["columns"] = std::move(cols);
  return out;
}

SymplecticSymbol symbol_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("n") ||
      !j.contains("sign") || !j.contains("columns"))
    malformed("symbol must be {ring, n, sign, columns}");
  Ring ring = ring_from_tag(j["ring"].get<std::string>());
  int n = j["n"].get<int>();
  if (n < 1) malformed("n must be positive");
  int sign = j["sign"].get<int>();
  const json& cols = j["columns"];
  if (!cols.is_array() || static_cast<int>(cols.size()) != 2 * n)
    malformed("symbol needs exactly 2n columns");
  std::vector<RVec> columns;
  for (const auto& c : cols) {
    RVec v = vector_from_json(ring, c);
    if (static_cast<int>(v.size()) != 2 * n) malformed("column has the wrong length");
    columns.push_back(std::move(v));
  }
  return SymplecticSymbol(SymplecticSpace{n, ring},
                          rmatrix_from_cols(ring, columns), sign);
}

json relation_to_json(const SignedRelation& r) {
  json out = json::object();
  json terms = json::array();
  for (const auto& t : r.terms) terms.push_back(symbol_to_json(t));
  out["terms"] = std::move(terms);
  return out;
}

SignedRelation relation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms")) malformed("relation must be {terms}");
  const json& terms = j["terms"];
  if (!terms.is_array()) malformed("relation terms must be an array");
  if (terms.empty()) malformed("relation needs at least one term to fix the space");
  SignedRelation out{SymplecticSpace{1, Ring::Z}, {}};
  for (const auto& t : terms) out.terms.push_back(symbol_from_json(t));
  out.space = out.terms[0].space();
  for (const auto& t : out.terms)
    if (t.space() != out.space) malformed("relation terms live in different spaces");
  return out;
}

json candidate_to_json(const Candidate& c) {
  json out = json::object();
  out["x"] = vector_to_json(c.x);
  json coeffs = json::array();
  for (const auto& q : c.coefficients) coeffs.push_back(field_element_to_json(q));
  out["coefficients"] = std::move(coeffs);
  json wit = json::array();
  for (const auto& w : c.witness_indices) wit.push_back(zint_to_json(w));
  out["witness_indices"] = std::move(wit);
  return out;
}

json chain_to_json(const ChamberChain& c) {
  json out = json::array();
  for (const auto& [key, entry] : c.entries()) {
    json item = json::object();
    json flag = json::array();
    for (const auto& sub : entry.first.flag) flag.push_back(matrix_to_json(sub.rows));
    item["chamber"] = std::move(flag);
    item["coeff"] = entry.second;
    out.push_back(std::move(item));
  }
  return out;
}

TraceLevel trace_level_from_string(const std::string& s) {
  if (s == "off") return TraceLevel::Off;
  if (s == "steps") return TraceLevel::Steps;
  if (s == "full") return TraceLevel::Full;
  malformed("trace level must be off, steps or full");
}

json trace_node_to_json(const TraceNode& n, TraceLevel level) {
  json out = json::object();
  out["step"] = n.kind;
  for (const auto& [k, v] : n.info) out[k] = v;
  if (n.candidate) out["candidate"] = candidate_to_json(*n.candidate);
  if (n.subdivision) {
    const SubdivisionData& data = *n.subdivision;
    out["x"] = vector_to_json(data.x);
    json dx = json::array();
    for (int idx : data.d_x) dx.push_back(idx);
    out["d_x"] = std::move(dx);
    if (level == TraceLevel::Full) {
      const SymplecticSpace& sp = data.base.space();
      json points = json::array();
      for (const auto& [key, raw] : data.points) {
        json p = json::object();
        p["i"] = pos_to_index(sp, key.first);
        p["j"] = pos_to_index(sp, key.second);
        p["x_ij"] = vector_to_json(raw);
        points.push_back(std::move(p));
      }
      out["points"] = std::move(points);
    }
  }
  if (level == TraceLevel::Full) {
    if (n.gamma) out["gamma"] = matrix_to_json(*n.gamma);
    if (n.transform) out["transform"] = matrix_to_json(*n.transform);
  }
  if (!n.children.empty()) {
    json kids = json::array();
    for (const auto& c : n.children) kids.push_back(trace_node_to_json(c, level));
    out["children"] = std::move(kids);
  }
  return out;
}

json trace_to_json(const ReductionTrace& t, TraceLevel level) {
  json out = json::array();
  if (level == TraceLevel::Off) return out;
  for (const auto& n : t.steps) out.push_back(trace_node_to_json(n, level));
  return out;
}

// ---- random instances ----------------------------------------------------

RandomSpec::Mode random_mode_from_string(const std::string& s) {
  if (s == "sp-member") return RandomSpec::Mode::SpMember;
  if (s == "isotropy-matrix") return RandomSpec::Mode::IsotropyMatrix;
  if (s == "deep-symbol") return RandomSpec::Mode::DeepSymbol;
  malformed("mode must be sp-member, isotropy-matrix or deep-symbol");
}

RingElement random_ring_element(Ring ring, SplitMix64& rng, long max_norm) {
  if (max_norm < 0) max_norm = 0;
  if (ring == Ring::Z) return RingElement(ring, rng.range(-max_norm, max_norm));
  long box = 1;
  while (box * box <= max_norm) ++box;
  for (;;) {
    RingElement x(ring, rng.range(-box, box), rng.range(-box, box));
    if (norm(x) <= max_norm) return x;
  }
}

namespace {

Zint max_entry_norm(const RMatrix& m) {
  Zint best = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Zint v = norm(m.at(i, j));
      if (v > best) best = v;
    }
  return best;
}

constexpr int kRejectionLimit = 10000;

[[noreturn]] void bound_too_small() {
  throw DomainError("bound-too-small", "rejection sampling failed 1e4 times");
}

RMatrix random_generator_word(const SymplecticSpace& s, long bound, SplitMix64& rng,
                              int words, int& rejections) {
  RMatrix g = rmatrix_identity(s.ring, s.dim());
  int applied = 0;
  while (applied < words) {
    if (rejections > kRejectionLimit) bound_too_small();
    RMatrix step = g;
    switch (rng.below(s.n >= 2 ? 5 : 2)) {
      case 0: {
        int idx = static_cast<int>(rng.range(1, s.n)) * (rng.coin() ? 1 : -1);
        step = gen_t1(s, idx, random_ring_element(s.ring, rng, 2)) * step;
        break;
      }
      case 1:
        step = gen_p1(s, static_cast<int>(rng.range(1, s.n))) * step;
        break;
      case 2: {
        int i = static_cast<int>(rng.range(1, s.n)), k = i;
        while (k == i) k = static_cast<int>(rng.range(1, s.n));
        step = gen_t2(s, i, k, random_ring_element(s.ring, rng, 2)) * step;
        break;
      }
      case 3: {
        int i = static_cast<int>(rng.range(1, s.n)), k = i;
        while (k == i) k = static_cast<int>(rng.range(1, s.n));
        step = gen_t3(s, i, k, random_ring_element(s.ring, rng, 2)) * step;
        break;
      }
      case 4: {
        std::vector<int> tau(s.n);
        for (int i = 0; i < s.n; ++i) tau[i] = i + 1;
        for (int i = s.n - 1; i > 0; --i)
          std::swap(tau[i], tau[static_cast<int>(rng.below(i + 1))]);
        step = gen_p2(s, tau) * step;
        break;
      }
    }
    if (max_entry_norm(step) > bound) {
      ++rejections;
      continue;
    }
    g = step;
    ++applied;
  }
  return g;
}

// col(ibar) <- c col(i) + d col(ibar) with gcd(c, d) a unit
RMatrix deepen_pair(const SymplecticSpace& s, const RMatrix& g, int i,
                    const RingElement& c, const RingElement& d) {
  RMatrix out = g;
  int p = index_to_pos(s, i), q = s.dim() - 1 - p;
  out.set_col(q, vec_add(vec_scale(c, g.col(p)), vec_scale(d, g.col(q))));
  return out;
}

}  // namespace

RMatrix random_sp_member(const SymplecticSpace& s, long bound, SplitMix64& rng) {
  if (bound < 1) throw DomainError("bound-too-small", "entry bound must be at least 1");
  int rejections = 0;
  int words = 4 + static_cast<int>(rng.below(8));
  return random_generator_word(s, bound, rng, words, rejections);
}

RMatrix random_isotropy_matrix(const SymplecticSpace& s, long bound, SplitMix64& rng) {
  int rejections = 0;
  for (;;) {
    if (rejections > kRejectionLimit) bound_too_small();
    RMatrix g = random_sp_member(s, bound, rng);
    bool ok = true;
    for (int i = 1; i <= s.n && ok; ++i) {
      if (rng.below(3) == 0) continue;
      RingElement c = random_ring_element(s.ring, rng, 2);
      RingElement d = random_ring_element(s.ring, rng, 4);
      if (d.is_zero()) d = RingElement::one(s.ring);
      if (!is_unit(gcd(c.is_zero() ? d : c, d))) c = RingElement::one(s.ring);
      RMatrix next = deepen_pair(s, g, i, c, d);
      if (max_entry_norm(next) > bound) {
        ++rejections;
        ok = false;
        break;
      }
      g = next;
    }
    if (!ok) continue;
    // random unit column rescalings keep the isotropy condition
    for (int c = 0; c < s.dim(); ++c) {
      auto units = ring_units(s.ring);
      RingElement u = units[rng.below(units.size())];
      if (!u.is_one()) g.set_col(c, vec_scale(u, g.col(c)));
    }
    return g;
  }
}

SymplecticSymbol random_deep_symbol(const SymplecticSpace& s, long bound,
                                    long depth_bound, SplitMix64& rng) {
  if (depth_bound < 2)
    throw DomainError("bound-too-small", "deep symbols need depth bound >= 2");
  // the deepening multiplies entries by up to the depth bound, so the
  // underlying word stays within a proportionally smaller box
  long base_bound = std::max<long>(2, bound / (2 * depth_bound + 2));
  int rejections = 0;
  for (;;) {
    if (rejections > kRejectionLimit) bound_too_small();
    RMatrix g = random_sp_member(s, base_bound, rng);
    // at least one pair gets a non-unit pairing
    int forced = 1 + static_cast<int>(rng.below(s.n));
    bool ok = true;
    for (int i = 1; i <= s.n; ++i) {
      bool deepen = (i == forced) || rng.coin();
      if (!deepen) continue;
      RingElement d = RingElement::zero(s.ring);
      while (norm(d) < 2) d = random_ring_element(s.ring, rng, depth_bound);
      if (i != forced && rng.below(3) == 0) d = RingElement::one(s.ring);
      RingElement c = random_ring_element(s.ring, rng, 2);
      if (!is_unit(gcd(c.is_zero() ? d : c, d))) c = RingElement::one(s.ring);
      RMatrix next = deepen_pair(s, g, i, c, d);
      if (max_entry_norm(next) > bound) {
        ++rejections;
        ok = false;
        break;
      }
      g = next;
    }
    if (!ok) continue;
    SymplecticSymbol sym = normalize(SymplecticSymbol(s, g, rng.coin() ? 1 : -1));
    if (depth(s, sym.matrix()) <= 1) {
      ++rejections;
      continue;
    }
    return sym;
  }
}

std::variant<RMatrix, SymplecticSymbol> random_instance(const RandomSpec& spec) {
  SplitMix64 rng(spec.seed);
  SymplecticSpace s{spec.n, spec.ring};
  switch (spec.mode) {
    case RandomSpec::Mode::SpMember:
      return random_sp_member(s, spec.entry_bound, rng);
    case RandomSpec::Mode::IsotropyMatrix:
      return random_isotropy_matrix(s, spec.entry_bound, rng);
    case RandomSpec::Mode::DeepSymbol:
      return random_deep_symbol(s, spec.entry_bound,
                                std::min<long>(spec.entry_bound, 50), rng);
  }
  throw std::logic_error("random_instance: unreachable");
}

}  // namespace sympms
