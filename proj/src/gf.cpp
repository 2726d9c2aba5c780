#include "matroid/gf.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace matroid {

bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5; }

int field_inverse(int p, int v) {
  v %= p;
  for (int x = 1; x < p; ++x) {
    if (v * x % p == 1) return x;
  }
  throw std::invalid_argument("no inverse for " + std::to_string(v) + " mod " + std::to_string(p));
}

bool field_selfcheck(int p) {
  for (int v = 1; v < p; ++v) {
    if (v * field_inverse(p, v) % p != 1) return false;
  }
  return true;
}

namespace {
void ensure_field(int p) {
  if (!is_supported_prime(p)) {
    throw std::invalid_argument("unsupported field GF(" + std::to_string(p) + ")");
  }
  static thread_local std::array<bool, 6> checked{};
  if (!checked[p]) {
    if (!field_selfcheck(p)) throw std::logic_error("field selfcheck failed");
    checked[p] = true;
  }
}
}  // namespace

FieldMatrix::FieldMatrix(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0), labels_(cols) {
  ensure_field(p);
  for (int c = 0; c < cols; ++c) labels_[c] = c + 1;
}

void FieldMatrix::set(int r, int c, int v) {
  entries_[r * cols_ + c] = ((v % p_) + p_) % p_;
}

void FieldMatrix::set_labels(std::vector<int> labels) {
  if (static_cast<int>(labels.size()) != cols_) throw std::invalid_argument("label count mismatch");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) throw std::invalid_argument("duplicate column label");
    }
  }
  labels_ = std::move(labels);
}

FieldMatrix FieldMatrix::from_literal(int p, const std::vector<std::vector<int>>& grid) {
  int rows = static_cast<int>(grid.size());
  int cols = rows == 0 ? 0 : static_cast<int>(grid[0].size());
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged grid");
  }
  FieldMatrix m(p, rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.set(r, c, grid[r][c]);
  }
  return m;
}

FieldMatrix FieldMatrix::with_identity_prefix(const FieldMatrix& a) {
  FieldMatrix m(a.p(), a.rows(), a.rows() + a.cols());
  for (int r = 0; r < a.rows(); ++r) {
    m.set(r, r, 1);
    for (int c = 0; c < a.cols(); ++c) m.set(r, a.rows() + c, a.at(r, c));
  }
  return m;
}

FieldMatrix FieldMatrix::pg_points(int p, int r) {
  if ((p != 2 && p != 3) || r > 4 || r < 1) {
    throw std::invalid_argument("pg_points supports p in {2,3}, r <= 4");
  }
  std::vector<std::vector<int>> cols;
  int total = 1;
  for (int i = 0; i < r; ++i) total *= p;
  for (int code = 1; code < total; ++code) {
    std::vector<int> v(r);
    int x = code;
    for (int i = r - 1; i >= 0; --i) {
      v[i] = x % p;
      x /= p;
    }
    // keep only vectors whose first nonzero coordinate is 1
    int lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) cols.push_back(v);
  }
  FieldMatrix m(p, r, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols(); ++c) {
    for (int i = 0; i < r; ++i) m.set(i, c, cols[c][i]);
  }
  return m;
}

int FieldMatrix::rank_mask(std::uint32_t col_mask) const {
  // Copy selected columns, then eliminate; pivot = first nonzero in column order.
  int k = std::popcount(col_mask);
  if (k == 0) return 0;
  std::vector<int> work(rows_ * k);
  int j = 0;
  for (int c = 0; c < cols_; ++c) {
    if (!(col_mask >> c & 1)) continue;
    for (int r = 0; r < rows_; ++r) work[r * k + j] = at(r, c);
    ++j;
  }
  int rank = 0;
  for (int c = 0; c < k && rank < rows_; ++c) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r) {
      if (work[r * k + c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    for (int cc = 0; cc < k; ++cc) std::swap(work[rank * k + cc], work[piv * k + cc]);
    int inv = field_inverse(p_, work[rank * k + c]);
    for (int cc = 0; cc < k; ++cc) work[rank * k + cc] = work[rank * k + cc] * inv % p_;
    for (int r = rank + 1; r < rows_; ++r) {
      int f = work[r * k + c];
      if (f == 0) continue;
      for (int cc = 0; cc < k; ++cc) {
        work[r * k + cc] = (work[r * k + cc] + (p_ - f) * work[rank * k + cc]) % p_;
      }
    }
    ++rank;
  }
  return rank;
}

int FieldMatrix::rank_labels(std::span<const int> col_labels) const {
  std::uint32_t mask = 0;
  for (int label : col_labels) {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw std::invalid_argument("unknown column label " + std::to_string(label));
    mask |= 1u << (it - labels_.begin());
  }
  return rank_mask(mask);
}

int FieldMatrix::rank() const {
  return rank_mask(cols_ >= 32 ? ~0u : (1u << cols_) - 1);
}

std::string FieldMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    os << "\n";
  }
  return os.str();
}

}  // namespace matroid
