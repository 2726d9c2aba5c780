#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matroid/core.hpp"
#include "matroid/gf.hpp"

namespace matroid {

struct CatalogEntry {
  std::string name;    // canonical, e.g. "Q9"
  Matroid m;
  std::string source;  // where the construction comes from
  int expected_n = -1;
  int expected_rank = -1;
  int expected_girth = -1;    // -1 = not recorded
  int expected_cogirth = -1;  // -1 = not recorded
};

/// All named matroids: U25, U35, F7, F7MINUS, F7STAR, P7, O7, Q9, MK33DUAL,
/// MK5, MK222, H12, MR4..MR7. Built once, shared immutably.
const std::vector<CatalogEntry>& catalog();

/// Case-insensitive lookup by canonical name.
std::optional<Matroid> by_name(std::string_view name);
const CatalogEntry* catalog_entry(std::string_view name);

struct TwoSumSpec {
  Matroid left;
  int left_basepoint;
  Matroid right;
  int right_basepoint;
};

/// 2-sum via the circuit-level definition. Ground set is
/// (E1 - p1) followed by (E2 - p2), densely relabeled in that order.
/// Throws if a basepoint is a loop or coloop of its side.
Matroid two_sum(const TwoSumSpec& spec);

/// The rank-r ternary matroid M_r = M[I_r | A_r], 4 <= r <= 7 (n = 2r+2).
/// Elements: 0..r-1 = b_1..b_r, r = b_{r+1}, r+1..2r+1 = a_1..a_{r+1}.
Matroid build_mr(int r);
inline int mr_b(int r, int i) { return i - 1; }             // i in 1..r+1
inline int mr_a(int r, int i) { return r + i; }             // i in 1..r+1

/// True iff some linear functional w over GF(3) has w.col != 0 for every
/// column; exhaustive over functionals up to scaling. Representation-relative.
bool affine_over_gf3(const FieldMatrix& m);

// The transcribed matrices (full [I|A] form where applicable).
FieldMatrix q9_matrix();                 // rank 4, 9 columns, GF(3)
FieldMatrix fano_matrix();               // PG(2,2)
FieldMatrix non_fano_matrix();           // GF(3), 7 columns
FieldMatrix p7_matrix();                 // GF(3), from the line structure
FieldMatrix o7_matrix();                 // GF(3); element 4 is the basepoint p
FieldMatrix mr_full_matrix(int r);       // [I_r | A_r]
FieldMatrix mk33dual_matrix();           // 4x9 ternary [I_4|A], gives the bond matroid of K_{3,3}
FieldMatrix mk222_matrix();              // 5x12 ternary [I_5|A], cycle matroid of K_{2,2,2}
FieldMatrix ar_resolved_matrix(int k);   // independent transcription of the A_r block
FieldMatrix mr_a_matrix(int r);          // the A_r block
FieldMatrix q9_host_matrix();            // 5x13 ternary [I_5|A]; a minor of it is Q_9

/// Element index of the basepoint p in o7_matrix()'s column order.
inline constexpr int kO7Basepoint = 4;

}  // namespace matroid
