#include "r2r/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace r2r {

namespace {

Partition shape_of(const TableauRows& rows) {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("tableau rows do not form a partition shape");
  }
}

// Filled cells must increase along rows and down columns; 0 marks an empty cell.
bool is_increasing(const TableauRows& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const int v = rows[i][j];
      if (v == 0) continue;
      if (j + 1 < rows[i].size() && rows[i][j + 1] != 0 && rows[i][j + 1] <= v) return false;
      if (i + 1 < rows.size() && j < rows[i + 1].size() && rows[i + 1][j] != 0 && rows[i + 1][j] <= v) return false;
    }
  return true;
}

}  // namespace

StandardTableau::StandardTableau(TableauRows rows) : shape_(shape_of(rows)), rows_(std::move(rows)) {
  const int n = shape_.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v < 1 || v > n || seen[v]) throw std::invalid_argument("standard tableau must use each of 1..n once");
      seen[v] = true;
    }
  if (!is_increasing(rows_)) throw std::invalid_argument("standard tableau must increase along rows and columns");
}

Cell StandardTableau::find(int value) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] == value) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
  throw std::out_of_range("value " + std::to_string(value) + " not in tableau");
}

SkewTableau::SkewTableau(Partition outer, Partition inner, TableauRows rows)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows)) {
  if (!outer_.contains(inner_)) throw std::invalid_argument("skew tableau: inner shape not contained in outer");
  if (rows_.size() != outer_.length()) throw std::invalid_argument("skew tableau: row count does not match outer shape");
  std::vector<int> values;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (static_cast<int>(rows_[i].size()) != outer_[i])
      throw std::invalid_argument("skew tableau: row length does not match outer shape");
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const bool in_inner = static_cast<int>(j) < inner_[i];
      if (in_inner != (rows_[i][j] == 0)) throw std::invalid_argument("skew tableau: inner cells must be exactly the empty cells");
      if (!in_inner) values.push_back(rows_[i][j]);
    }
  }
  std::sort(values.begin(), values.end());
  for (std::size_t k = 1; k < values.size(); ++k)
    if (values[k] != values[k - 1] + 1) throw std::invalid_argument("skew tableau: entries must form a contiguous range");
  if (!is_increasing(rows_)) throw std::invalid_argument("skew tableau: entries must increase along rows and columns");
}

SkewTableau SkewTableau::from_standard(const StandardTableau& t) { return SkewTableau(t.shape(), Partition{}, t.rows()); }

StandardTableau SkewTableau::to_standard() const {
  if (!inner_.empty()) throw std::logic_error("skew tableau has a nonempty inner shape");
  return StandardTableau(rows_);
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape, int cap) {
  if (shape.size() > cap)
    throw std::invalid_argument("enumerate_syt: shape has " + std::to_string(shape.size()) + " cells, cap is " + std::to_string(cap));
  const int n = shape.size();
  std::vector<StandardTableau> out;
  TableauRows rows(shape.length());
  // Place n, n-1, ..., 1 into removable corners of the remaining shape.
  std::vector<int> filled = shape.parts();
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].assign(static_cast<std::size_t>(shape[i]), 0);
  auto rec = [&](auto&& self, int value) -> void {
    if (value == 0) {
      out.push_back(StandardTableau(rows, shape, StandardTableau::Unchecked{}));
      return;
    }
    for (std::size_t i = 0; i < filled.size(); ++i) {
      const int len = filled[i];
      if (len == 0) continue;
      const int below = i + 1 < filled.size() ? filled[i + 1] : 0;
      if (below == len) continue;
      rows[i][len - 1] = value;
      --filled[i];
      self(self, value - 1);
      ++filled[i];
      rows[i][len - 1] = 0;
    }
  };
  rec(rec, n);
  std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) { return a.rows() < b.rows(); });
  return out;
}

int smallest_ascent(const StandardTableau& t) {
  const int n = t.size();
  if (n == 0) throw std::invalid_argument("smallest_ascent: empty tableau");
  std::vector<int> row_of(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < t.rows().size(); ++i)
    for (int v : t.rows()[i]) row_of[v] = static_cast<int>(i);
  for (int i = 1; i < n; ++i)
    if (row_of[i + 1] <= row_of[i]) return i;
  return n;
}

bool is_desarrangement(const StandardTableau& t) { return smallest_ascent(t) % 2 == 0; }

BigInt desarrangement_count(const Partition& mu) {
  thread_local std::unordered_map<Partition, BigInt, PartitionHash> memo;
  if (mu.empty()) return 1;
  if (auto it = memo.find(mu); it != memo.end()) return it->second;
  BigInt count = syt_count(mu);
  for (const Partition& rho : horizontal_strip_subshapes(mu))
    if (rho != mu) count -= desarrangement_count(rho);
  memo.emplace(mu, count);
  return count;
}

SkewTableau jdt_slide(const SkewTableau& t, Cell cell) {
  const Partition& outer = t.outer();
  const Partition& inner = t.inner();
  const auto r = static_cast<std::size_t>(cell.row);
  TableauRows rows = t.rows();
  std::vector<int> outer_parts = outer.parts();
  std::vector<int> inner_parts = inner.parts();

  const bool interior = cell.row >= 1 && cell.col >= 1 && r <= inner.length() && cell.col == inner[r - 1] &&
                        inner[r] < cell.col;
  const bool exterior = cell.row >= 1 && r <= outer.length() + 1 && cell.col == outer[r - 1] + 1 &&
                        (cell.row == 1 || outer[r - 2] >= cell.col);
  if (!interior && !exterior)
    throw std::invalid_argument("jdt_slide: cell (" + std::to_string(cell.row) + "," + std::to_string(cell.col) +
                                ") is neither an inner corner nor an addable outer cell");

  auto filled = [&](int row, int col) {
    if (row < 1 || col < 1) return false;
    const auto i = static_cast<std::size_t>(row - 1);
    return i < rows.size() && col <= static_cast<int>(rows[i].size()) && rows[i][col - 1] != 0;
  };
  auto value = [&](int row, int col) { return rows[row - 1][col - 1]; };

  Cell hole = cell;
  if (interior) {
    rows[r - 1][cell.col - 1] = 0;
    while (true) {
      const bool right = filled(hole.row, hole.col + 1);
      const bool below = filled(hole.row + 1, hole.col);
      if (!right && !below) break;
      Cell from = (right && (!below || value(hole.row, hole.col + 1) < value(hole.row + 1, hole.col)))
                      ? Cell{hole.row, hole.col + 1}
                      : Cell{hole.row + 1, hole.col};
      rows[hole.row - 1][hole.col - 1] = value(from.row, from.col);
      rows[from.row - 1][from.col - 1] = 0;
      hole = from;
    }
    --inner_parts[r - 1];
    --outer_parts[static_cast<std::size_t>(hole.row) - 1];
    rows[static_cast<std::size_t>(hole.row) - 1].pop_back();
    if (rows.back().empty()) rows.pop_back();
  } else {
    if (r > rows.size()) {
      rows.emplace_back();
      outer_parts.push_back(0);
    }
    rows[r - 1].push_back(0);
    ++outer_parts[r - 1];
    // Cells of the inner shape read as empty; the hole itself is 0.
    auto open = [&](int row, int col) {
      return row >= 1 && col >= 1 && col > inner[static_cast<std::size_t>(row) - 1] && filled(row, col);
    };
    while (true) {
      const bool left = open(hole.row, hole.col - 1);
      const bool above = open(hole.row - 1, hole.col);
      if (!left && !above) break;
      Cell from = (left && (!above || value(hole.row, hole.col - 1) > value(hole.row - 1, hole.col)))
                      ? Cell{hole.row, hole.col - 1}
                      : Cell{hole.row - 1, hole.col};
      rows[hole.row - 1][hole.col - 1] = value(from.row, from.col);
      rows[from.row - 1][from.col - 1] = 0;
      hole = from;
    }
    const auto h = static_cast<std::size_t>(hole.row);
    if (h > inner_parts.size()) inner_parts.resize(h, 0);
    ++inner_parts[h - 1];
  }
  return SkewTableau(Partition(std::move(outer_parts)), Partition(std::move(inner_parts)), std::move(rows));
}

namespace {

// Cells of lambda/mu, ordered by column.
std::vector<Cell> strip_cells(const Partition& lambda, const Partition& mu) {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = mu[i] + 1; j <= lambda[i]; ++j) cells.push_back({static_cast<int>(i) + 1, j});
  std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return a.col < b.col; });
  return cells;
}

}  // namespace

StandardTableau rsw_forward(const StandardTableau& q, const Partition& lambda) {
  if (!q.empty() && !is_desarrangement(q)) throw std::invalid_argument("rsw_forward: q is not a desarrangement tableau");
  if (!is_horizontal_strip(lambda, q.shape())) throw std::invalid_argument("rsw_forward: lambda/mu is not a horizontal strip");

  const int strip = lambda.size() - q.size();
  SkewTableau t = SkewTableau::from_standard(q);
  for (Cell c : strip_cells(lambda, q.shape())) t = jdt_slide(t, c);

  if (t.outer() != lambda || t.inner() != Partition(strip > 0 ? std::vector<int>{strip} : std::vector<int>{}))
    throw std::logic_error("rsw_forward: slides did not empty the start of the first row");

  TableauRows rows = t.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      rows[i][j] = (i == 0 && static_cast<int>(j) < strip) ? static_cast<int>(j) + 1 : rows[i][j] + strip;
  return StandardTableau(std::move(rows));
}

std::pair<Partition, StandardTableau> rsw_inverse(const StandardTableau& p) {
  if (p.empty()) return {Partition{}, StandardTableau{}};
  const TableauRows& rows = p.rows();

  int a = 0;
  while (a < static_cast<int>(rows[0].size()) && rows[0][a] == a + 1) ++a;
  int b = 0;
  while (static_cast<std::size_t>(b) + 1 < rows.size() && rows[b + 1][0] == a + b + 1) ++b;

  const int removed = (b % 2 == 1) ? a - 1 : a;
  TableauRows skew = rows;
  for (int j = 0; j < removed; ++j) skew[0][j] = 0;
  SkewTableau t(p.shape(), removed > 0 ? Partition{removed} : Partition{}, std::move(skew));
  for (int col = removed; col >= 1; --col) t = jdt_slide(t, {1, col});

  TableauRows out = t.rows();
  for (auto& row : out)
    for (int& v : row) v -= removed;
  StandardTableau q(std::move(out));
  Partition mu = q.shape();
  return {std::move(mu), std::move(q)};
}

namespace {

BigInt kostka_rec(const Partition& lambda, const std::vector<int>& content, std::size_t prefix,
                  std::map<std::pair<Partition, std::size_t>, BigInt>& memo) {
  if (prefix == 0) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, prefix);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt total = 0;
  // The largest entry, prefix, occupies a horizontal strip of size content[prefix-1].
  for (const Partition& mu : horizontal_strip_subshapes(lambda, lambda.size() - content[prefix - 1]))
    total += kostka_rec(mu, content, prefix - 1, memo);
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt kostka_number(const Partition& lambda, const Partition& nu) {
  if (lambda.size() != nu.size()) throw std::invalid_argument("kostka_number: partitions of different sizes");
  if (!dominates(lambda, nu)) return 0;
  std::map<std::pair<Partition, std::size_t>, BigInt> memo;
  return kostka_rec(lambda, nu.parts(), nu.length(), memo);
}

}  // namespace r2r
