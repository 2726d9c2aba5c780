#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace matroid {

/// Dense matrix over GF(p) for p in {2, 3, 5}, with labeled columns.
/// Entries are stored reduced mod p; rank is exact Gaussian elimination.
class FieldMatrix {
 public:
  FieldMatrix(int p, int rows, int cols);

  /// Builds from a signed integer grid, reducing entries mod p, so matrices
  /// can be transcribed character-for-character (with -1 meaning p-1).
  /// Column labels default to 1..cols. Throws on a ragged grid or bad p.
  static FieldMatrix from_literal(int p, const std::vector<std::vector<int>>& grid);

  /// [I_r | A] with identity columns prepended to A's columns.
  static FieldMatrix with_identity_prefix(const FieldMatrix& a);

  /// One column per point of PG(r-1, p), normalized so the first nonzero
  /// coordinate is 1. Supported for p in {2,3}, r <= 4.
  static FieldMatrix pg_points(int p, int r);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return entries_[r * cols_ + c]; }
  void set(int r, int c, int v);

  const std::vector<int>& labels() const { return labels_; }
  void set_labels(std::vector<int> labels);

  /// Rank of the columns selected by position bitmask.
  int rank_mask(std::uint32_t col_mask) const;
  /// Rank of the columns selected by label; unknown label throws.
  int rank_labels(std::span<const int> col_labels) const;
  /// Rank of the whole matrix.
  int rank() const;

  bool operator==(const FieldMatrix& o) const = default;

  std::string to_string() const;

 private:
  int p_, rows_, cols_;
  std::vector<int> entries_;  // row-major, values in [0, p)
  std::vector<int> labels_;
};

bool is_supported_prime(int p);

/// Multiplicative inverse in GF(p); v must be nonzero.
int field_inverse(int p, int v);

/// Exhaustive check that every nonzero element of GF(p) has an inverse.
/// Runs once per p on first FieldMatrix construction.
bool field_selfcheck(int p);

}  // namespace matroid
