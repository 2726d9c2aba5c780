#include "matroid/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace matroid {

FieldMatrix q9_matrix() {
  // [I_4 | A] with the committed ternary A block
  return FieldMatrix::with_identity_prefix(FieldMatrix::from_literal(3, {
      {1, 1, 0, 1, 1},
      {1, 0, 1, 1, 1},
      {0, 1, 0, -1, 1},
      {0, 0, 1, 1, -1},
  }));
}

FieldMatrix fano_matrix() { return FieldMatrix::pg_points(2, 3); }

FieldMatrix non_fano_matrix() {
  // the Fano column pattern read over GF(3): {110,101,011} becomes independent
  return FieldMatrix::from_literal(3, {
      {1, 0, 0, 1, 1, 0, 1},
      {0, 1, 0, 1, 0, 1, 1},
      {0, 0, 1, 0, 1, 1, 1},
  });
}

FieldMatrix p7_matrix() {
  // columns a,b,c,d,e,f,g; lines {a,b,c},{a,e,d},{c,g,d},{b,f,d},{e,f,g}
  // and no others (audited by the catalog tests)
  return FieldMatrix::from_literal(3, {
      {1, 1, 0, 0, 1, 1, 0},
      {0, 1, 1, 0, 0, 1, 1},
      {0, 0, 0, 1, 1, 2, 1},
  });
}

FieldMatrix o7_matrix() {
  // columns a,b,c,d,p,f,g; the 4-point line {a,b,c,d}, 3-point lines
  // {a,f,p},{d,g,p},{f,b,g}; the unique triad {f,p,g} contains p (col 4)
  return FieldMatrix::from_literal(3, {
      {1, 1, 1, 0, 0, 1, 0},
      {0, 1, 2, 1, 0, 0, 1},
      {0, 0, 0, 0, 1, 1, 2},
  });
}

FieldMatrix mr_a_matrix(int r) {
  // A_r columns: b_{r+1}, a_1..a_{r+1}. b_{r+1} is all ones; a_i covers rows
  // b_i,b_{i+1} for i < r; a_r covers b_1..b_{r-1}; a_{r+1} covers b_2..b_r.
  FieldMatrix a(3, r, r + 2);
  for (int row = 0; row < r; ++row) a.set(row, 0, 1);
  for (int i = 1; i < r; ++i) {
    a.set(i - 1, i, 1);
    a.set(i, i, 1);
  }
  for (int row = 0; row < r - 1; ++row) a.set(row, r, 1);
  for (int row = 1; row < r; ++row) a.set(row, r + 1, 1);
  return a;
}

FieldMatrix mr_full_matrix(int r) { return FieldMatrix::with_identity_prefix(mr_a_matrix(r)); }

FieldMatrix ar_resolved_matrix(int k) {
  // independently transcribed row by row; rows y_1..y_k,
  // columns y_{k+1}, z_1..z_{k+1}
  FieldMatrix a(3, k, k + 2);
  for (int i = 1; i <= k; ++i) {
    int row = i - 1;
    a.set(row, 0, 1);                      // y_{k+1}
    for (int j = 1; j <= k - 1; ++j) {     // z_j, j < k
      a.set(row, j, (i == j || i == j + 1) ? 1 : 0);
    }
    a.set(row, k, i < k ? 1 : 0);          // z_k
    a.set(row, k + 1, i > 1 ? 1 : 0);      // z_{k+1}
  }
  return a;
}

FieldMatrix mk33dual_matrix() {
  // identity columns x_1,x_2,x_4,x_5 then x_3,x_7,x_8,x_6,x_9
  return FieldMatrix::with_identity_prefix(FieldMatrix::from_literal(3, {
      {1, 1, 0, 0, 1},
      {1, 0, 1, 0, 1},
      {0, 1, 0, 1, 1},
      {0, 0, 1, 1, 1},
  }));
}

FieldMatrix mk222_matrix() {
  // identity columns x_1,x_2,x_4,x_5,x_9 then x_3,x_7,x_8,x_6,x_10,x_11,x_12
  return FieldMatrix::with_identity_prefix(FieldMatrix::from_literal(3, {
      {1, 1, 0, 0, 0, 0, 1},
      {1, 0, 1, 0, 0, 1, 0},
      {0, 1, 0, 1, 1, 0, 0},
      {0, 0, 1, 1, 1, 1, -1},
      {0, 0, 0, 0, 1, 1, -1},
  }));
}

FieldMatrix q9_host_matrix() {
  // identity columns x_1,x_2,x_4,x_5,x_8 then x_3,x_6,x_7,alpha,e,f,g,h
  return FieldMatrix::with_identity_prefix(FieldMatrix::from_literal(3, {
      {1, 1, 0, 1, 1, 1, 1, 0},
      {1, 0, 1, 1, 0, 0, 0, 0},
      {0, 1, 0, 0, 1, 0, -1, 1},
      {0, 0, 1, 0, 0, -1, 1, 1},
      {0, 0, 0, 1, 1, 1, 1, 0},
  }));
}

Matroid build_mr(int r) {
  if (r < 4 || r > 7) throw std::invalid_argument("build_mr supports 4 <= r <= 7 (n = 2r+2 <= 16)");
  return Matroid::from_matrix(mr_full_matrix(r));
}

Matroid two_sum(const TwoSumSpec& spec) {
  const Matroid& m1 = spec.left;
  const Matroid& m2 = spec.right;
  int p1 = spec.left_basepoint, p2 = spec.right_basepoint;
  for (auto [m, p] : {std::pair<const Matroid*, int>{&m1, p1}, {&m2, p2}}) {
    if (p < 0 || p >= m->n()) throw std::invalid_argument("basepoint outside ground set");
    if (m->rank_of(1u << p) == 0) throw std::invalid_argument("basepoint is a loop");
    if (m->rank_of(static_cast<Word>(full_set(m->n()) & ~(1u << p))) < m->rank()) {
      throw std::invalid_argument("basepoint is a coloop");
    }
  }
  int n = m1.n() + m2.n() - 2;
  if (n > kMaxElements) throw std::invalid_argument("2-sum exceeds 16 elements");

  auto shift1 = [&](Word c) {  // relabel E1 - p1 into 0..n1-2
    Word out = 0;
    int idx = 0;
    for (int e = 0; e < m1.n(); ++e) {
      if (e == p1) continue;
      if (c >> e & 1) out |= 1u << idx;
      ++idx;
    }
    return out;
  };
  auto shift2 = [&](Word c) {  // relabel E2 - p2 into n1-1 ..
    Word out = 0;
    int idx = m1.n() - 1;
    for (int e = 0; e < m2.n(); ++e) {
      if (e == p2) continue;
      if (c >> e & 1) out |= 1u << idx;
      ++idx;
    }
    return out;
  };

  std::vector<Word> combined;
  SetFamily c1 = circuits(m1), c2 = circuits(m2);
  for (Word c : c1.members) {
    if (!(c >> p1 & 1)) combined.push_back(shift1(c));
  }
  for (Word c : c2.members) {
    if (!(c >> p2 & 1)) combined.push_back(shift2(c));
  }
  for (Word ca : c1.members) {
    if (!(ca >> p1 & 1)) continue;
    for (Word cb : c2.members) {
      if (!(cb >> p2 & 1)) continue;
      combined.push_back(static_cast<Word>(shift1(ca) | shift2(cb)));
    }
  }
  return Matroid::from_circuits(n, combined);
}

bool affine_over_gf3(const FieldMatrix& m) {
  if (m.p() != 3) throw std::invalid_argument("affine check requires a GF(3) matrix");
  int rows = m.rows();
  int total = 1;
  for (int i = 0; i < rows; ++i) total *= 3;
  for (int code = 1; code < total; ++code) {
    std::vector<int> w(rows);
    int x = code;
    for (int i = rows - 1; i >= 0; --i) {
      w[i] = x % 3;
      x /= 3;
    }
    int lead = 0;
    while (w[lead] == 0) ++lead;
    if (w[lead] != 1) continue;  // one functional per scaling class
    bool hits_all = true;
    for (int c = 0; c < m.cols() && hits_all; ++c) {
      int dot = 0;
      for (int r = 0; r < rows; ++r) dot = (dot + w[r] * m.at(r, c)) % 3;
      if (dot == 0) hits_all = false;
    }
    if (hits_all) return true;
  }
  return false;
}

namespace {

Matroid k5_matroid() {
  // vertex labels: 0 and 2 are the two "equator" ends, 1 the apex of the
  // pentagon drawing; edges listed as the 5-cycle b_1..b_5 then a_1..a_5
  return Matroid::from_graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                              {0, 2}, {2, 4}, {3, 1}, {3, 0}, {1, 4}});
}

Matroid k222_matroid() {
  // octahedron labeled x_1..x_12; vertices bl=0, br=1, tr=2, tl=3, mid=4, top=5
  return Matroid::from_graph({{5, 3}, {2, 5}, {3, 2}, {0, 5}, {5, 1}, {1, 0},
                              {0, 3}, {2, 1}, {1, 4}, {4, 0}, {4, 2}, {3, 4}});
}

Matroid k33_dual_matroid() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) edges.push_back({u, v});
  }
  return dual(Matroid::from_graph(edges));
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  auto add = [&](std::string name, Matroid m, std::string source, int n, int r, int g, int cg) {
    cat.push_back(CatalogEntry{std::move(name), std::move(m), std::move(source), n, r, g, cg});
  };
  Matroid o7 = Matroid::from_matrix(o7_matrix());

  add("U25", Matroid::uniform(2, 5), "uniform", 5, 2, 3, 4);
  add("U35", Matroid::uniform(3, 5), "uniform", 5, 3, 4, 3);
  add("F7", Matroid::from_matrix(fano_matrix()), "PG(2,2)", 7, 3, 3, 4);
  add("F7MINUS", Matroid::from_matrix(non_fano_matrix()), "GF(3) seven-column matrix", 7, 3, 3, 4);
  add("F7STAR", dual(Matroid::from_matrix(fano_matrix())), "dual of PG(2,2)", 7, 4, 4, 3);
  add("P7", Matroid::from_matrix(p7_matrix()), "rank-3 line structure", 7, 3, 3, 4);
  add("O7", o7, "rank-3 line structure", 7, 3, 3, 3);
  add("Q9", Matroid::from_matrix(q9_matrix()), "[I_4|A] ternary matrix", 9, 4, 3, 4);
  add("MK33DUAL", k33_dual_matroid(), "bond matroid of K_{3,3}", 9, 4, 3, 4);
  add("MK5", k5_matroid(), "cycle matroid of K_5", 10, 4, 3, 4);
  add("MK222", k222_matroid(), "cycle matroid of K_{2,2,2}", 12, 5, 3, 4);
  add("H12", two_sum({o7, kO7Basepoint, o7, kO7Basepoint}), "O_7 2-sum O_7 at p", 12, 5, 3, 4);
  for (int r = 4; r <= 7; ++r) {
    add("MR" + std::to_string(r), build_mr(r), "[I_r|A_r] ternary matrix",
        2 * r + 2, r, 3, 4);
  }
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry* catalog_entry(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (const auto& e : catalog()) {
    if (e.name == upper) return &e;
  }
  return nullptr;
}

std::optional<Matroid> by_name(std::string_view name) {
  const CatalogEntry* e = catalog_entry(name);
  if (!e) return std::nullopt;
  return e->m;
}

}  // namespace matroid
