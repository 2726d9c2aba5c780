#include "matroid/core.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace matroid {

bool SetFamily::is_antichain() const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i != j && (members[i] & members[j]) == members[i]) return false;
    }
  }
  return true;
}

std::string set_to_string(Word w) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int e = 0; e < kMaxElements; ++e) {
    if (w >> e & 1) {
      os << (first ? "" : ",") << e;
      first = false;
    }
  }
  os << "}";
  return os.str();
}

std::string source_name(Source s) {
  switch (s) {
    case Source::linear: return "linear";
    case Source::graphic: return "graphic";
    case Source::circuits: return "circuits";
    case Source::derived: return "derived";
  }
  return "?";
}

Matroid Matroid::from_bases(int n, std::vector<Word> bases, Source source) {
  if (n < 0 || n > kMaxElements) throw std::invalid_argument("ground set exceeds 16 elements");
  if (bases.empty()) throw std::invalid_argument("matroid needs at least one basis");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  int r = popcount(bases[0]);
  for (Word b : bases) {
    if (popcount(b) != r) throw std::invalid_argument("bases of mixed cardinality");
    if (b & ~full_set(n)) throw std::invalid_argument("basis outside ground set");
  }
  Matroid m;
  m.n_ = n;
  m.r_ = r;
  m.bases_ = std::move(bases);
  m.source_ = source;
  return m;
}

Matroid Matroid::empty() { return from_bases(0, {0}, Source::derived); }

Matroid Matroid::uniform(int r, int n) {
  std::vector<Word> bases;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if (popcount(static_cast<Word>(x)) == r) bases.push_back(static_cast<Word>(x));
  }
  return from_bases(n, std::move(bases), Source::derived);
}

Matroid Matroid::from_matrix(const FieldMatrix& mat) {
  int n = mat.cols();
  if (n > kMaxElements) throw std::invalid_argument("matrix has more than 16 columns");
  int r = mat.rank();
  std::vector<Word> bases;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    Word w = static_cast<Word>(x);
    if (popcount(w) == r && mat.rank_mask(x) == r) bases.push_back(w);
  }
  return from_bases(n, std::move(bases), Source::linear);
}

Matroid Matroid::from_graph(const std::vector<std::pair<int, int>>& edges) {
  int n = static_cast<int>(edges.size());
  if (n > kMaxElements) throw std::invalid_argument("graph has more than 16 edges");
  int vmax = -1;
  for (auto [u, v] : edges) vmax = std::max({vmax, u, v});
  int nv = vmax + 1;

  auto forest_rank = [&](Word subset) {
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int rank = 0;
    for (int e = 0; e < n; ++e) {
      if (!(subset >> e & 1)) continue;
      int a = find(edges[e].first), b = find(edges[e].second);
      if (a != b) {
        parent[a] = b;
        ++rank;
      }
    }
    return rank;
  };

  int r = forest_rank(full_set(n));
  std::vector<Word> bases;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    Word w = static_cast<Word>(x);
    if (popcount(w) == r && forest_rank(w) == r) bases.push_back(w);
  }
  return from_bases(n, std::move(bases), Source::graphic);
}

Matroid Matroid::from_circuits(int n, const std::vector<Word>& circuit_list) {
  if (n < 0 || n > kMaxElements) throw std::invalid_argument("ground set exceeds 16 elements");
  // antichain check
  for (std::size_t i = 0; i < circuit_list.size(); ++i) {
    for (std::size_t j = 0; j < circuit_list.size(); ++j) {
      if (i != j && (circuit_list[i] & circuit_list[j]) == circuit_list[i]) {
        throw std::invalid_argument("circuit family is not an antichain");
      }
    }
  }
  std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> dep(size, 0);
  for (Word c : circuit_list) dep[c] = 1;
  for (int i = 0; i < n; ++i) {
    for (std::size_t x = 0; x < size; ++x) {
      if (!(x >> i & 1) && dep[x]) dep[x | (std::size_t{1} << i)] = 1;
    }
  }
  int r = 0;
  for (std::size_t x = 0; x < size; ++x) {
    if (!dep[x]) r = std::max(r, popcount(static_cast<Word>(x)));
  }
  // every maximal independent set must have cardinality r
  for (std::size_t x = 0; x < size; ++x) {
    if (dep[x] || popcount(static_cast<Word>(x)) == r) continue;
    bool maximal = true;
    for (int e = 0; e < n && maximal; ++e) {
      if (!(x >> e & 1) && !dep[x | (std::size_t{1} << e)]) maximal = false;
    }
    if (maximal) throw std::invalid_argument("circuit axioms violated: maximal independent sets of mixed size");
  }
  std::vector<Word> bases;
  for (std::size_t x = 0; x < size; ++x) {
    if (!dep[x] && popcount(static_cast<Word>(x)) == r) bases.push_back(static_cast<Word>(x));
  }
  // full basis-exchange audit guards against transcription mistakes
  for (Word b1 : bases) {
    for (Word b2 : bases) {
      Word only1 = b1 & ~b2;
      for (int x = 0; x < n; ++x) {
        if (!(only1 >> x & 1)) continue;
        bool found = false;
        Word only2 = b2 & ~b1;
        for (int y = 0; y < n && !found; ++y) {
          if ((only2 >> y & 1) && !dep[(b1 ^ (1u << x)) | (1u << y)]) found = true;
        }
        if (!found) throw std::invalid_argument("circuit axioms violated: basis exchange fails");
      }
    }
  }
  return from_bases(n, std::move(bases), Source::circuits);
}

const std::vector<std::uint8_t>& Matroid::rank_table() const {
  if (!rank_table_) {
    std::size_t size = std::size_t{1} << n_;
    std::vector<std::uint8_t> ind(size, 0);
    for (Word b : bases_) ind[b] = 1;
    for (int i = 0; i < n_; ++i) {
      for (std::size_t x = 0; x < size; ++x) {
        if ((x >> i & 1) && ind[x]) ind[x ^ (std::size_t{1} << i)] = 1;
      }
    }
    auto table = std::make_shared<std::vector<std::uint8_t>>(size, 0);
    auto& rk = *table;
    for (std::size_t x = 1; x < size; ++x) {
      if (ind[x]) {
        rk[x] = static_cast<std::uint8_t>(popcount(static_cast<Word>(x)));
      } else {
        std::uint8_t best = 0;
        for (std::size_t e = x; e;) {
          std::size_t bit = e & (~e + 1);
          e ^= bit;
          best = std::max(best, rk[x ^ bit]);
        }
        rk[x] = best;
      }
    }
    rank_table_ = std::move(table);
  }
  return *rank_table_;
}

int Matroid::rank_of(Word x) const {
  if (x & ~full_set(n_)) throw std::invalid_argument("subset outside ground set");
  return rank_table()[x];
}

Matroid dual(const Matroid& m) {
  Word e = full_set(m.n());
  std::vector<Word> bases;
  bases.reserve(m.bases().size());
  for (Word b : m.bases()) bases.push_back(static_cast<Word>(e & ~b));
  return Matroid::from_bases(m.n(), std::move(bases), Source::derived);
}

namespace {
Relabeled relabel_dense(const Matroid& m, Word keep, int new_rank, Source src) {
  int n = m.n();
  std::vector<int> new_to_old, old_to_new(n, -1);
  for (int e = 0; e < n; ++e) {
    if (keep >> e & 1) {
      old_to_new[e] = static_cast<int>(new_to_old.size());
      new_to_old.push_back(e);
    }
  }
  int n2 = static_cast<int>(new_to_old.size());
  std::vector<Word> bases;
  for (std::uint32_t x = 0; x < (1u << n2); ++x) {
    if (popcount(static_cast<Word>(x)) != new_rank) continue;
    Word orig = 0;
    for (int i = 0; i < n2; ++i) {
      if (x >> i & 1) orig |= 1u << new_to_old[i];
    }
    if (m.rank_of(orig) == new_rank) bases.push_back(static_cast<Word>(x));
  }
  if (bases.empty()) bases.push_back(0);
  return Relabeled{Matroid::from_bases(n2, std::move(bases), src),
                   std::move(new_to_old), std::move(old_to_new)};
}
}  // namespace

Relabeled delete_set(const Matroid& m, Word d) {
  Word keep = full_set(m.n()) & ~d;
  return relabel_dense(m, keep, m.rank_of(keep), Source::derived);
}

Relabeled contract_set(const Matroid& m, Word c) {
  // by duality: M/C = (M* \ C)*
  Relabeled r = delete_set(dual(m), c);
  r.m = dual(r.m);
  return r;
}

Relabeled minor(const Matroid& m, Word contract, Word del) {
  if (contract & del) throw std::invalid_argument("contract and delete sets overlap");
  Relabeled rc = contract_set(m, contract);
  Word d2 = 0;
  for (int e = 0; e < m.n(); ++e) {
    if ((del >> e & 1) && rc.old_to_new[e] >= 0) d2 |= 1u << rc.old_to_new[e];
  }
  Relabeled rd = delete_set(rc.m, d2);
  // compose maps back to the original labels
  Relabeled out{std::move(rd.m), {}, {}};
  out.old_to_new.assign(m.n(), -1);
  for (std::size_t i = 0; i < rd.new_to_old.size(); ++i) {
    int orig = rc.new_to_old[rd.new_to_old[i]];
    out.new_to_old.push_back(orig);
    out.old_to_new[orig] = static_cast<int>(i);
  }
  return out;
}

SetFamily circuits(const Matroid& m) {
  SetFamily fam;
  fam.n = m.n();
  fam.kind = SetFamily::Kind::circuits;
  for (std::uint32_t xi = 1; xi < (1u << m.n()); ++xi) {
    Word x = static_cast<Word>(xi);
    int k = popcount(x);
    if (m.rank_of(x) >= k) continue;  // independent
    bool minimal = true;
    for (Word rest = x; rest && minimal;) {
      Word bit = rest & (~rest + 1);
      rest ^= bit;
      Word y = x ^ bit;
      if (m.rank_of(y) < popcount(y)) minimal = false;
    }
    if (minimal) fam.members.push_back(x);
  }
  std::sort(fam.members.begin(), fam.members.end(), [](Word a, Word b) {
    return std::pair(popcount(a), a) < std::pair(popcount(b), b);
  });
  return fam;
}

SetFamily cocircuits(const Matroid& m) {
  SetFamily fam = circuits(dual(m));
  fam.kind = SetFamily::Kind::cocircuits;
  return fam;
}

SetFamily triangles(const Matroid& m) {
  SetFamily fam;
  fam.n = m.n();
  fam.kind = SetFamily::Kind::triangles;
  for (Word c : circuits(m).members) {
    if (popcount(c) == 3) fam.members.push_back(c);
  }
  return fam;
}

int girth(const Matroid& m) {
  int best = kInfinity;
  for (std::uint32_t xi = 1; xi < (1u << m.n()); ++xi) {
    Word x = static_cast<Word>(xi);
    int k = popcount(x);
    if (k < best && m.rank_of(x) < k) best = k;
  }
  return best;
}

int cogirth(const Matroid& m) { return girth(dual(m)); }

bool is_simple(const Matroid& m) { return girth(m) >= 3; }
bool is_cosimple(const Matroid& m) { return cogirth(m) >= 3; }

Relabeled simplify(const Matroid& m) {
  Word drop = 0;
  for (int e = 0; e < m.n(); ++e) {
    if (m.rank_of(1u << e) == 0) {
      drop |= 1u << e;  // loop
      continue;
    }
    for (int f = 0; f < e; ++f) {
      if ((drop >> f & 1) || m.rank_of(1u << f) == 0) continue;
      if (m.rank_of((1u << e) | (1u << f)) == 1) {
        drop |= 1u << e;  // parallel to a lower surviving label
        break;
      }
    }
  }
  return delete_set(m, drop);
}

Word closure(const Matroid& m, Word x) {
  Word cl = x;
  int rx = m.rank_of(x);
  for (int e = 0; e < m.n(); ++e) {
    if (!(x >> e & 1) && m.rank_of(x | (1u << e)) == rx) cl |= 1u << e;
  }
  return cl;
}

ConnectivityValue lambda(const Matroid& m, Word x) {
  Word e = full_set(m.n());
  return {m.rank_of(x) + m.rank_of(e & ~x) - m.rank(), x};
}

ConnectivityValue kappa(const Matroid& m, Word x, Word y) {
  if (x & y) throw std::invalid_argument("kappa needs disjoint sets");
  Word freeElems = full_set(m.n()) & ~x & ~y;
  ConnectivityValue best{kInfinity, 0};
  // iterate subsets T of the free elements in increasing numeric order
  Word t = 0;
  while (true) {
    ConnectivityValue lv = lambda(m, static_cast<Word>(x | t));
    if (lv.value < best.value) best = lv;
    if (t == freeElems) break;
    t = static_cast<Word>((t - freeElems) & freeElems);  // next submask
  }
  return best;
}

bool is_connected_k(const Matroid& m, int k) {
  Word e = full_set(m.n());
  for (std::uint32_t xi = 0; xi < (1u << m.n()); ++xi) {
    Word x = static_cast<Word>(xi);
    int small = std::min(popcount(x), popcount(static_cast<Word>(e & ~x)));
    for (int j = 1; j < k; ++j) {
      if (small >= j && lambda(m, x).value < j) return false;
    }
  }
  return true;
}

bool audit_basis_exchange(const Matroid& m, int samples, std::uint64_t seed, bool full) {
  const auto& bases = m.bases();
  auto is_basis = [&](Word w) { return popcount(w) == m.rank() && m.rank_of(w) == m.rank(); };
  auto check_pair = [&](Word b1, Word b2) {
    Word only1 = b1 & ~b2;
    for (int x = 0; x < m.n(); ++x) {
      if (!(only1 >> x & 1)) continue;
      bool found = false;
      Word only2 = b2 & ~b1;
      for (int y = 0; y < m.n() && !found; ++y) {
        if ((only2 >> y & 1) && is_basis(static_cast<Word>((b1 ^ (1u << x)) | (1u << y)))) found = true;
      }
      if (!found) return false;
    }
    return true;
  };
  if (full) {
    for (Word b1 : bases) {
      for (Word b2 : bases) {
        if (!check_pair(b1, b2)) return false;
      }
    }
    return true;
  }
  std::uint64_t state = seed ? seed : 1;
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int i = 0; i < samples; ++i) {
    Word b1 = bases[next() % bases.size()];
    Word b2 = bases[next() % bases.size()];
    if (!check_pair(b1, b2)) return false;
  }
  return true;
}

}  // namespace matroid
