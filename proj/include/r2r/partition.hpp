#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "r2r/exact.hpp"

namespace r2r {

/// Integer partition stored as weakly decreasing positive parts, no trailing
/// zeros. The empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// positive. Trailing zeros are stripped.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return size_; }

  /// Part i (0-based); 0 past the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Whether (row, col), 1-based, is a cell of the diagram.
  bool contains_cell(int row, int col) const;
  /// Containment of diagrams.
  bool contains(const Partition& other) const;

  bool operator==(const Partition&) const = default;
  std::strong_ordering operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Canonical order: lexicographically descending.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_first_part = std::nullopt);

Partition conjugate(const Partition& lambda);

/// True iff mu is contained in lambda and lambda/mu has at most one cell in
/// each column.
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

/// All mu with lambda/mu a horizontal strip, optionally only those of the
/// given size. Canonical (lexicographically descending) order.
std::vector<Partition> horizontal_strip_subshapes(const Partition& lambda,
                                                  std::optional<int> size = std::nullopt);

/// Sum of (col - row) over the cells of the diagram.
long long diag_index(const Partition& lambda);

/// Dominance order. Throws std::invalid_argument if the sizes differ.
bool dominates(const Partition& lambda, const Partition& nu);

/// Number of standard Young tableaux, by the hook length formula.
BigInt syt_count(const Partition& lambda);

/// Helpers for [k, 1^l] style shapes.
Partition hook_shape(int first_row, int column_tail);
Partition single_column(int n);

}  // namespace r2r
