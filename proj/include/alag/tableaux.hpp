#pragma once

// Permutation tableaux: 0/1 fillings of Ferrers shapes (empty rows allowed)
// in which every column holds a 1 and no 0 has both a 1 above it in its
// column and a 1 to its left in its row. Length = rows + columns.
//
// Rows are indexed top to bottom and columns left to right, both from 0.
// The southeast border is labelled 1..n from the northeast corner to the
// southwest corner; a south step labels a row, a west step labels a column.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "alag/exactpoly.hpp"
#include "alag/permcomb.hpp"

namespace alag {

class PermTableau {
 public:
  using Fill = std::vector<std::vector<std::uint8_t>>;

  /// Throws std::invalid_argument if the shape is not weakly decreasing, or the
  /// fill does not match it, or an entry is not 0/1. Does not check the tableau rules.
  PermTableau(std::vector<int> shape, Fill fill);

  const std::vector<int>& shape() const { return shape_; }
  const Fill& fill() const { return fill_; }
  int rows() const { return static_cast<int>(shape_.size()); }
  int columns() const { return shape_.empty() ? 0 : shape_.front(); }
  int length() const { return rows() + columns(); }
  /// Number of cells in column c.
  int column_height(int c) const;
  bool at(int r, int c) const { return fill_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0; }

  friend bool operator==(const PermTableau&, const PermTableau&) = default;

 private:
  std::vector<int> shape_;
  Fill fill_;
};

struct BorderLabels {
  std::vector<int> row_label;     // by row index
  std::vector<int> column_label;  // by column index
};

BorderLabels border_labels(const std::vector<int>& shape);

/// Both tableau conditions.
bool validate(const PermTableau& t);

/// Calls visit for every tableau of length n (n >= 1): shapes by decreasing
/// number of rows, then lexicographically by row lengths; fillings column by column.
void for_each_pt(int n, const std::function<void(const PermTableau&)>& visit);
std::vector<PermTableau> enumerate_pt(int n);

/// Rows containing no restricted 0 (a 0 with a 1 above it), as row indices.
std::vector<int> unrestricted_rows(const PermTableau& t);
/// Columns containing no c-restricted 0 (a 0 with a 1 to its left), as column indices.
std::vector<int> unrestricted_columns(const PermTableau& t);
int urr(const PermTableau& t);
int urc(const PermTableau& t);

enum class Arrow : std::uint8_t { none, up, left };

class AltTableau {
 public:
  using Cells = std::vector<std::vector<Arrow>>;
  AltTableau(std::vector<int> shape, Cells cells);

  const std::vector<int>& shape() const { return shape_; }
  const Cells& cells() const { return cells_; }
  Arrow at(int r, int c) const { return cells_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  int rows() const { return static_cast<int>(shape_.size()); }
  int columns() const { return shape_.empty() ? 0 : shape_.front(); }
  /// Row index of the up-arrow in column c, or -1.
  int up_arrow_row(int c) const;

  friend bool operator==(const AltTableau&, const AltTableau&) = default;

 private:
  std::vector<int> shape_;
  Cells cells_;
};

/// Topmost 1 of each column becomes an up-arrow, the rightmost restricted 0 of
/// each row a left-arrow.
AltTableau to_alternative(const PermTableau& t);

/// Exactly one up-arrow per column, no left-arrow with an arrow to its left,
/// no up-arrow with an arrow above it.
bool validate(const AltTableau& a);

/// Columns whose up-arrow has no arrow strictly to its northwest.
std::vector<int> northwest_free_columns(const AltTableau& a);

/// The insertion bijection onto permutations of [length].
Permutation phi(const PermTableau& t);

/// sum_{T in PT_n} X^{urr} Y^{urc}
Poly pt_statistic_sum(int n);
/// sum_{T in PT_{n+1}} X^{urr - 1} Y^{urc}
Poly pt_weighted_sum(int n);

/// Shape line ("3,1,0"; empty for the zero-row shape) followed by one line of
/// 0/1 characters per row.
std::string to_text(const PermTableau& t);
/// Same layout with '^', '<', '.'.
std::string to_text(const AltTableau& a);
/// Inverse of to_text(PermTableau). Throws std::invalid_argument.
PermTableau parse_tableau(std::string_view text);

}  // namespace alag
