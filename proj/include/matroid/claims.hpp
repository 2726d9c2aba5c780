#pragma once

#include <map>
#include <string>
#include <vector>

#include "matroid/constructions.hpp"
#include "matroid/iso.hpp"

namespace matroid {

/// Checks the committed representation matrices against their intended
/// matroids: (a) the 4x9 matrix vs the bond matroid of K_{3,3}; (b) the
/// 5x12 matrix vs the cycle matroid of K_{2,2,2}; (c) the resolved block
/// pattern vs the A_r pattern; (d) the 13-element matrix's contract/delete
/// reduction vs Q_9.
std::vector<ClaimReport> verify_figure_matrices();

struct SweepResult {
  int field = 0;
  int rank = 0;
  int universe_size = 0;          // points of PG(rank-1, field)
  int subsets_scanned = 0;        // all restrictions
  int classes_examined = 0;       // survivors up to isomorphism
  std::vector<Matroid> survivors; // one representative per class
  std::vector<std::string> failures;  // replayable specs of survivors lacking every expected minor
  std::map<std::pair<int, int>, int> census;  // (n, r) -> class count
};

/// Enumerates all restrictions of PG(rank-1, field), filters to simple with
/// cogirth >= 4, dedupes by fingerprint + isomorphism, and checks each class
/// representative for at least one expected minor. Supported (field, rank):
/// (2,3), (2,4), (3,3). Throws on anything else.
SweepResult run_sweep(int field, int rank);

/// The expected-minor list for a supported sweep.
std::vector<std::string> sweep_targets(int field, int rank);

/// Scans all 9-point rank-4 restrictions of PG(3,2) for an isomorph of Q_9;
/// passes when none exists.
ClaimReport q9_not_binary();

/// Claim batteries. Suites: "catalog" (expected tuples + class membership,
/// element structure, minor-minimality of the nine), "lemmas" (the M_r
/// identities, committed matrices, affine check, binary exclusion), "duals"
/// (girth/cogirth of the nine duals), "sweeps", "all".
std::vector<ClaimReport> run_suite(const std::string& suite);

/// {"schema":1,"claims":[{id,status,detail,elapsed_ms},...]}, claims sorted
/// by id.
std::string report_to_json(std::vector<ClaimReport> claims);

}  // namespace matroid
