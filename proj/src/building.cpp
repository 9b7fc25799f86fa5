#include "sympms/building.hpp"

#include <algorithm>

namespace sympms {

namespace {

// fraction-free Gauss-Jordan on rows, then primitivize each row with a
// canonical leading entry; drops zero rows
std::vector<RVec> canonical_rows(std::vector<RVec> rows) {
  const int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    int p = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (!rows[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[r]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      RingElement pivot = rows[r][c], lead = rows[i][c];
      for (int j = 0; j < cols; ++j)
        rows[i][j] = pivot * rows[i][j] - lead * rows[r][j];
      if (!vec_is_zero(rows[i])) rows[i] = make_primitive(rows[i]).vector;
    }
    ++r;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const RVec& v) { return vec_is_zero(v); }),
             rows.end());
  for (auto& row : rows) {
    row = make_primitive(row).vector;
    for (const auto& x : row) {
      if (x.is_zero()) continue;
      RingElement u = canonical_associate(x).second;
      if (!u.is_one()) row = vec_scale(u, row);
      break;
    }
  }
  return rows;
}

int perm_sign(const std::vector<int>& perm) {
  int s = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

}  // namespace

Subspace span_canonical(const SymplecticSpace& s, const std::vector<RVec>& vectors) {
  std::vector<RVec> rows = canonical_rows(vectors);
  Subspace out{static_cast<int>(rows.size()),
               rmatrix_zero(s.ring, static_cast<int>(rows.size()), s.dim())};
  for (int i = 0; i < out.dim; ++i)
    for (int j = 0; j < s.dim(); ++j) out.rows.at(i, j) = rows[i][j];
  for (int i = 0; i < out.dim; ++i)
    for (int j = i + 1; j < out.dim; ++j)
      if (!sym_pair(s, rows[i], rows[j]).is_zero())
        throw std::logic_error("span_canonical: non-isotropic subspace");
  return out;
}

std::string chamber_key(const Chamber& c) {
  std::string key;
  for (const auto& sub : c.flag) {
    key += std::to_string(sub.dim);
    key += ':';
    for (int i = 0; i < sub.rows.rows(); ++i)
      for (int j = 0; j < sub.rows.cols(); ++j) {
        key += sub.rows.at(i, j).a().get_str();
        key += ',';
        key += sub.rows.at(i, j).b().get_str();
        key += ';';
      }
    key += '|';
  }
  return key;
}

void ChamberChain::add(const Chamber& c, long long coeff) {
  if (coeff == 0) return;
  std::string key = chamber_key(c);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(std::move(key), std::make_pair(c, coeff));
    return;
  }
  it->second.second += coeff;
  if (it->second.second == 0) entries_.erase(it);
}

ChamberChain ChamberChain::operator+(const ChamberChain& o) const {
  if (space_ != o.space_)
    throw DomainError("space-mismatch", "chain sum across different spaces");
  ChamberChain out = *this;
  for (const auto& [key, entry] : o.entries_) out.add(entry.first, entry.second);
  return out;
}

ChamberChain ChamberChain::operator-() const {
  ChamberChain out(space_);
  for (const auto& [key, entry] : entries_) out.add(entry.first, -entry.second);
  return out;
}

bool ChamberChain::operator==(const ChamberChain& o) const {
  if (space_ != o.space_)
    throw DomainError("space-mismatch", "chain comparison across different spaces");
  if (entries_.size() != o.entries_.size()) return false;
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  for (; a != entries_.end(); ++a, ++b)
    if (a->first != b->first || a->second.second != b->second.second) return false;
  return true;
}

ChamberChain expand(const SymplecticSymbol& s) {
  const SymplecticSpace& sp = s.space();
  ChamberChain chain(sp);
  if (s.is_zero()) return chain;

  const int n = sp.n;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;

  std::vector<RVec> cols(sp.dim());
  for (int p = 0; p < sp.dim(); ++p) cols[p] = s.matrix().col(p);

  do {
    int sgn = perm_sign(perm);
    for (int bars = 0; bars < (1 << n); ++bars) {
      int barsign = 1;
      std::vector<RVec> picked;
      picked.reserve(n);
      for (int k = 0; k < n; ++k) {
        int idx = perm[k];
        if (bars & (1 << k)) {
          idx = -idx;
          barsign = -barsign;
        }
        picked.push_back(cols[index_to_pos(sp, idx)]);
      }
      // nondegenerate symbols have independent columns, so every prefix
      // span grows; the guard below keeps degenerate inputs harmless
      Chamber chamber;
      bool ok = true;
      std::vector<RVec> prefix;
      for (int k = 0; k < n; ++k) {
        prefix.push_back(picked[k]);
        Subspace sub = span_canonical(sp, prefix);
        if (sub.dim != k + 1) {
          ok = false;
          break;
        }
        chamber.flag.push_back(sub);
      }
      if (!ok) continue;
      chain.add(chamber, static_cast<long long>(s.sign()) * sgn * barsign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return chain;
}

bool boundary_is_zero(const ChamberChain& c) {
  const int n = c.space().n;
  if (n == 1) {
    long long total = 0;
    for (const auto& [key, entry] : c.entries()) total += entry.second;
    return total == 0;
  }
  std::map<std::string, long long> faces;
  for (const auto& [key, entry] : c.entries()) {
    const Chamber& ch = entry.first;
    for (int k = 0; k < n; ++k) {
      Chamber face;
      for (int i = 0; i < n; ++i)
        if (i != k) face.flag.push_back(ch.flag[i]);
      long long sign = (k % 2 == 0) ? 1 : -1;
      std::string fkey = chamber_key(face);
      faces[fkey] += sign * entry.second;
      if (faces[fkey] == 0) faces.erase(fkey);
    }
  }
  return faces.empty();
}

bool chains_equal(const ChamberChain& a, const ChamberChain& b) { return a == b; }

ChamberChain chain_sum(const std::vector<ChamberChain>& chains) {
  if (chains.empty()) throw DomainError("empty-sum", "chain_sum needs at least one chain");
  ChamberChain out = chains[0];
  for (size_t i = 1; i < chains.size(); ++i) out = out + chains[i];
  return out;
}

ChamberChain expand_relation(const SignedRelation& rel) {
  ChamberChain out(rel.space);
  for (const auto& t : rel.terms) out = out + expand(t);
  return out;
}

}  // namespace sympms
