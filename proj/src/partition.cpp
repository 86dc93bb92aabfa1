#include "r2r/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace r2r {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains_cell(int row, int col) const {
  return row >= 1 && col >= 1 && static_cast<std::size_t>(row) <= parts_.size() && col <= parts_[row - 1];
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (std::size_t i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part);
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_first_part) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, max_first_part.value_or(n), prefix, out);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.first()), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++cols[j];
  return Partition(std::move(cols));
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
  if (!lambda.contains(mu)) return false;
  // One cell per column <=> mu interlaces lambda: lambda_{i+1} <= mu_i.
  for (std::size_t i = 0; i + 1 < lambda.length(); ++i)
    if (mu[i] < lambda[i + 1]) return false;
  return true;
}

std::vector<Partition> horizontal_strip_subshapes(const Partition& lambda, std::optional<int> size) {
  const std::size_t rows = lambda.length();
  std::vector<Partition> out;
  if (size && (*size < 0 || *size > lambda.size())) return out;

  // Bounds on the remaining sum of mu_i.. for pruning when a size is requested.
  std::vector<int> min_tail(rows + 1, 0), max_tail(rows + 1, 0);
  for (std::size_t i = rows; i-- > 0;) {
    min_tail[i] = min_tail[i + 1] + lambda[i + 1];
    max_tail[i] = max_tail[i + 1] + lambda[i];
  }

  std::vector<int> mu(rows, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int sum) {
    if (i == rows) {
      if (!size || sum == *size) out.emplace_back(mu);
      return;
    }
    for (int part = lambda[i]; part >= lambda[i + 1]; --part) {
      if (size) {
        const int total_min = sum + part + min_tail[i + 1];
        const int total_max = sum + part + max_tail[i + 1];
        if (total_min > *size) continue;
        if (total_max < *size) break;
      }
      mu[i] = part;
      rec(i + 1, sum + part);
    }
  };
  rec(0, 0);
  return out;
}

long long diag_index(const Partition& lambda) {
  long long total = 0;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    const long long row = static_cast<long long>(i) + 1;
    const long long len = lambda[i];
    // sum_{j=1}^{len} (j - row)
    total += len * (len + 1) / 2 - len * row;
  }
  return total;
}

bool dominates(const Partition& lambda, const Partition& nu) {
  if (lambda.size() != nu.size()) throw std::invalid_argument("dominates: partitions of different sizes");
  long long lhs = 0, rhs = 0;
  const std::size_t len = std::max(lambda.length(), nu.length());
  for (std::size_t i = 0; i < len; ++i) {
    lhs += lambda[i];
    rhs += nu[i];
    if (lhs < rhs) return false;
  }
  return true;
}

BigInt syt_count(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  BigInt hooks = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j)
      hooks *= (lambda[i] - j - 1) + (cols[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

Partition hook_shape(int first_row, int column_tail) {
  std::vector<int> parts;
  if (first_row > 0) parts.push_back(first_row);
  parts.insert(parts.end(), static_cast<std::size_t>(column_tail), 1);
  return Partition(std::move(parts));
}

Partition single_column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

}  // namespace r2r
