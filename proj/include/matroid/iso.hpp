#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matroid/core.hpp"

namespace matroid {

/// Isomorphism-invariant token: (n, r, basis count, circuit/cocircuit size
/// histograms, sorted per-element signatures). Equal matroids under identity
/// labeling get equal fingerprints; unequal fingerprints rule out isomorphism.
struct Fingerprint {
  int n = 0, r = 0;
  std::size_t basis_count = 0;
  std::vector<int> circuit_sizes;    // sorted
  std::vector<int> cocircuit_sizes;  // sorted
  std::vector<std::string> element_signatures;  // sorted
  std::string token;

  bool operator==(const Fingerprint& o) const { return token == o.token; }
};

Fingerprint fingerprint(const Matroid& m);

/// Per-element signature (multiset of circuit sizes through e, then multiset
/// of cocircuit sizes through e), used for partition refinement.
std::vector<std::string> element_signatures(const Matroid& m);

/// Exact isomorphism: returns a bijection perm with perm[a-element] =
/// b-element mapping bases onto bases, or nullopt. Deterministic: elements
/// are processed by (signature, label) and candidates tried in label order.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a, const Matroid& b);

struct MinorWitness {
  Word contract = 0;             // host labels
  Word del = 0;                  // host labels
  std::vector<int> mapping;      // mapping[target element] = host element
};

/// Exhaustive minor search; nullopt is a proof of non-containment.
/// The first witness in (contract-mask, delete-mask) order is returned,
/// re-verified by replay before being surfaced.
std::optional<MinorWitness> has_minor(const Matroid& host, const Matroid& target);

/// Replays contract/delete plus the element mapping and checks exact equality.
bool verify_witness(const Matroid& host, const Matroid& target, const MinorWitness& w);

/// Membership in the central class: simple (girth >= 3) with every cocircuit
/// of size at least four. The empty matroid is excluded by convention.
bool in_m4(const Matroid& m);

struct ClaimReport {
  enum class Status { pass, fail, skipped };
  std::string id;
  Status status = Status::skipped;
  std::string detail;
  double elapsed_ms = 0.0;
};

std::string status_name(ClaimReport::Status s);

/// Pass iff m is in the class and EVERY proper minor (all 3^n contract/delete
/// pairs) falls out of it. Skipped for n > 13 (cost cap).
ClaimReport is_minor_minimal_m4(const Matroid& m, const std::string& id = "minor-minimal");

/// Pass iff every element is in a triangle and in a cocircuit of size
/// exactly four.
ClaimReport element_structure(const Matroid& m, const std::string& id = "element-structure");

}  // namespace matroid
