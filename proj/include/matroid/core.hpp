#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "matroid/gf.hpp"

namespace matroid {

// Ground sets are capped at 16 elements so every subset fits in a machine
// word and full 2^n sweeps stay <= 65536 iterations. The largest object in
// scope is PG(3,2) with 15 points (M_7 has 16 elements).
inline constexpr int kMaxElements = 16;
using Word = std::uint16_t;

inline int popcount(Word w) { return __builtin_popcount(w); }
inline Word full_set(int n) { return static_cast<Word>((1u << n) - 1); }

/// Sentinel for the girth/cogirth of free/cofree matroids.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

enum class Source { linear, graphic, circuits, derived };

struct SetFamily {
  enum class Kind { circuits, cocircuits, triangles, hyperplanes, flats };
  int n = 0;
  Kind kind = Kind::circuits;
  std::vector<Word> members;  // sorted by (cardinality, bitmask)

  bool is_antichain() const;
};

struct ConnectivityValue {
  int value = 0;
  Word argument = 0;
};

/// The single canonical matroid form: ground set 0..n-1, bases as a sorted
/// duplicate-free list of r-element bitmask words. All constructions
/// (linear, graphic, circuit-defined) compile down to this.
class Matroid {
 public:
  static Matroid from_bases(int n, std::vector<Word> bases, Source source);
  static Matroid from_matrix(const FieldMatrix& m);
  static Matroid from_graph(const std::vector<std::pair<int, int>>& edges);
  /// Independence = "contains no listed circuit". Rejects (throws) if the
  /// resulting maximal independent sets have mixed sizes or fail the
  /// basis-exchange audit.
  static Matroid from_circuits(int n, const std::vector<Word>& circuits);
  static Matroid uniform(int r, int n);
  /// n = 0, one empty basis.
  static Matroid empty();

  int n() const { return n_; }
  int rank() const { return r_; }
  const std::vector<Word>& bases() const { return bases_; }
  Source source() const { return source_; }

  /// r(X), O(1) after the lazily built 2^n rank table exists.
  int rank_of(Word x) const;
  bool independent(Word x) const { return rank_of(x) == popcount(x); }

  bool operator==(const Matroid& o) const { return n_ == o.n_ && bases_ == o.bases_; }

 private:
  Matroid() = default;
  const std::vector<std::uint8_t>& rank_table() const;

  int n_ = 0, r_ = 0;
  std::vector<Word> bases_;
  Source source_ = Source::derived;
  mutable std::shared_ptr<std::vector<std::uint8_t>> rank_table_;
};

/// A minor or simplification result: the matroid with densely relabeled
/// ground set, plus the label maps. new_to_old[i] = original label of new
/// element i; old_to_new[e] = -1 for removed elements.
struct Relabeled {
  Matroid m;
  std::vector<int> new_to_old;
  std::vector<int> old_to_new;
};

Relabeled delete_set(const Matroid& m, Word d);
Relabeled contract_set(const Matroid& m, Word c);
/// (m / c) \ d for disjoint c, d; one combined relabel map.
Relabeled minor(const Matroid& m, Word contract, Word del);

SetFamily circuits(const Matroid& m);
SetFamily cocircuits(const Matroid& m);
SetFamily triangles(const Matroid& m);

Matroid dual(const Matroid& m);

int girth(const Matroid& m);    // kInfinity when no circuits
int cogirth(const Matroid& m);  // kInfinity when no cocircuits
bool is_simple(const Matroid& m);
bool is_cosimple(const Matroid& m);
/// Removes loops and all but the lowest-labeled member of each parallel class.
Relabeled simplify(const Matroid& m);

Word closure(const Matroid& m, Word x);

/// lambda(X) = r(X) + r(E-X) - r(E); equals r(X) + r*(X) - |X|.
ConnectivityValue lambda(const Matroid& m, Word x);
/// min{lambda(S) : X <= S <= E - Y} by exhaustion, with one minimizing S.
ConnectivityValue kappa(const Matroid& m, Word x, Word y);
/// Tutte k-connectivity, k in {2, 3}: no j-separation for j < k.
bool is_connected_k(const Matroid& m, int k);

/// Basis-exchange spot check on random basis pairs; full=true checks all pairs.
bool audit_basis_exchange(const Matroid& m, int samples = 200, std::uint64_t seed = 1,
                          bool full = false);

std::string set_to_string(Word w);
std::string source_name(Source s);

}  // namespace matroid
