#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "r2r/exact.hpp"
#include "r2r/partition.hpp"

namespace r2r {

/// 1-based (row, column) cell coordinate.
struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

using TableauRows = std::vector<std::vector<int>>;

/// A standard Young tableau: entries 1..n, strictly increasing along rows
/// and down columns.
class StandardTableau {
 public:
  StandardTableau() = default;
  /// Throws std::invalid_argument if `rows` is not a standard filling of a
  /// partition shape.
  explicit StandardTableau(TableauRows rows);

  const Partition& shape() const { return shape_; }
  const TableauRows& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  bool empty() const { return rows_.empty(); }

  int at(Cell c) const { return rows_[c.row - 1][c.col - 1]; }
  /// Cell holding `value`.
  Cell find(int value) const;

  bool operator==(const StandardTableau&) const = default;

 private:
  struct Unchecked {};
  StandardTableau(TableauRows rows, Partition shape, Unchecked)
      : shape_(std::move(shape)), rows_(std::move(rows)) {}
  friend std::vector<StandardTableau> enumerate_syt(const Partition&, int);

  Partition shape_;
  TableauRows rows_;
};

/// Filling of outer/inner. Cells of the inner shape hold 0; the remaining
/// cells hold a contiguous range of integers increasing along rows and
/// columns.
class SkewTableau {
 public:
  SkewTableau() = default;
  /// `rows[i]` has length outer[i]; its first inner[i] entries must be 0.
  SkewTableau(Partition outer, Partition inner, TableauRows rows);
  /// Straight shape (empty inner).
  static SkewTableau from_standard(const StandardTableau& t);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  const TableauRows& rows() const { return rows_; }

  /// The straight-shape tableau; throws unless the inner shape is empty.
  StandardTableau to_standard() const;

  bool operator==(const SkewTableau&) const = default;

 private:
  friend SkewTableau jdt_slide(const SkewTableau&, Cell);
  Partition outer_;
  Partition inner_;
  TableauRows rows_;
};

/// Upper bound on the number of cells accepted by the enumerators.
inline constexpr int kDefaultEnumerationCap = 12;

/// Every standard tableau of `shape`, in lexicographic order of the row
/// reading word. Throws std::invalid_argument above `cap` cells.
std::vector<StandardTableau> enumerate_syt(const Partition& shape, int cap = kDefaultEnumerationCap);

/// Least ascent, where i < n is an ascent when i + 1 lies in a row weakly
/// above i, and n is always an ascent.
int smallest_ascent(const StandardTableau& t);
bool is_desarrangement(const StandardTableau& t);

/// Number of desarrangement tableaux of shape mu, d^mu. Uses
/// d^mu = d_mu - sum over proper strip-subshapes rho of d^rho, with
/// d^{empty} = 1. The memo is thread-local.
BigInt desarrangement_count(const Partition& mu);

/// One jeu de taquin slide into `cell`. An inner corner slides outward and
/// an addable outer cell slides inward. Throws std::invalid_argument for any
/// other cell.
SkewTableau jdt_slide(const SkewTableau& t, Cell cell);

/// Desarrangement tableau of shape mu -> standard tableau of shape lambda,
/// for lambda/mu a horizontal strip.
StandardTableau rsw_forward(const StandardTableau& q, const Partition& lambda);

/// Inverse of rsw_forward: returns (mu, q).
std::pair<Partition, StandardTableau> rsw_inverse(const StandardTableau& p);

/// Number of semistandard tableaux of shape lambda and content nu, by peeling
/// horizontal strips. Throws std::invalid_argument if sizes differ.
BigInt kostka_number(const Partition& lambda, const Partition& nu);

}  // namespace r2r
