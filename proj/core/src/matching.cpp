#include "mcs/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mcs/numeric.hpp"

namespace mcs {

namespace {

constexpr double kZeroTolerance = 1e-12;

// Flat n x n adjacency.
struct BoolGrid {
  explicit BoolGrid(std::size_t n) : n(n), cells(n * n, 0) {}
  char operator()(std::size_t r, std::size_t c) const { return cells[r * n + c]; }
  char& operator()(std::size_t r, std::size_t c) { return cells[r * n + c]; }
  std::size_t n;
  std::vector<char> cells;
};

// Costs for minimization: negated weights scaled by a power of two so the
// largest magnitude lies in (0.5, 1]. The scaling is exact, so the argmax of
// the original matrix is preserved bit for bit and the absolute zero
// tolerance is meaningful regardless of units.
std::vector<double> normalized_costs(const WeightMatrix& w) {
  const std::size_t n = w.size();
  double largest = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) largest = std::max(largest, w.at(r, c));
  int exponent = 0;
  std::frexp(largest, &exponent);
  std::vector<double> cost(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) cost[r * n + c] = -std::ldexp(w.at(r, c), -exponent);
  return cost;
}

// Kuhn augmenting path from `row` over allowed edges.
bool augment(std::size_t row, const BoolGrid& allowed, std::vector<std::size_t>& row_of_col,
             std::vector<char>& visited) {
  const std::size_t n = allowed.n;
  for (std::size_t c = 0; c < n; ++c) {
    if (!allowed(row, c) || visited[c]) continue;
    visited[c] = 1;
    if (row_of_col[c] == n || augment(row_of_col[c], allowed, row_of_col, visited)) {
      row_of_col[c] = row;
      return true;
    }
  }
  return false;
}

// Maximum matching on `allowed`; returns row_of_col (n = unmatched).
std::vector<std::size_t> max_matching(const BoolGrid& allowed, std::size_t& matched) {
  const std::size_t n = allowed.n;
  std::vector<std::size_t> row_of_col(n, n);
  std::vector<char> visited(n);
  matched = 0;
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(r, allowed, row_of_col, visited)) ++matched;
  }
  return row_of_col;
}

// Alternating path for rows above `fixed_through`: can `row` move to a
// different column so that `target` ends up taken? Rewrites the matching on
// success.
bool reroute(std::size_t row, std::size_t target, std::size_t fixed_through,
             const BoolGrid& allowed, std::vector<std::size_t>& col_of_row,
             std::vector<std::size_t>& row_of_col, std::vector<char>& visited) {
  const std::size_t n = allowed.n;
  for (std::size_t c = 0; c < n; ++c) {
    if (!allowed(row, c) || visited[c] || c == col_of_row[row]) continue;
    const std::size_t holder = row_of_col[c];
    if (c != target && holder <= fixed_through) continue;
    visited[c] = 1;
    if (c == target ||
        reroute(holder, target, fixed_through, allowed, col_of_row, row_of_col, visited)) {
      col_of_row[row] = c;
      row_of_col[c] = row;
      return true;
    }
  }
  return false;
}

// Turns a perfect matching of `allowed` into the lexicographically smallest
// one: row by row, try each smaller allowed column and let the displaced row
// reroute through the unfixed rows to the column being given up.
void make_lex_smallest(const BoolGrid& allowed, std::vector<std::size_t>& col_of_row) {
  const std::size_t n = allowed.n;
  std::vector<std::size_t> row_of_col(n);
  for (std::size_t r = 0; r < n; ++r) row_of_col[col_of_row[r]] = r;
  std::vector<char> visited(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < col_of_row[r]; ++c) {
      if (!allowed(r, c)) continue;
      const std::size_t holder = row_of_col[c];
      if (holder < r) continue;
      const std::size_t freed = col_of_row[r];
      std::fill(visited.begin(), visited.end(), 0);
      visited[c] = 1;
      // Tentatively give c to r; the holder must reach `freed`.
      col_of_row[r] = c;
      row_of_col[c] = r;
      if (reroute(holder, freed, r, allowed, col_of_row, row_of_col, visited)) break;
      col_of_row[r] = freed;
      row_of_col[c] = holder;
      row_of_col[freed] = r;
    }
  }
}

Assignment to_assignment(const WeightMatrix& w, const std::vector<std::size_t>& col_of_row) {
  std::vector<Pair> pairs;
  pairs.reserve(col_of_row.size());
  for (std::size_t r = 0; r < col_of_row.size(); ++r) pairs.push_back({w.user(col_of_row[r]), r});
  return Assignment(std::move(pairs));
}

}  // namespace

WeightMatrix::WeightMatrix(std::size_t n, std::vector<double> entries,
                           std::vector<UserId> users)
    : n_(n), entries_(std::move(entries)), users_(std::move(users)) {
  if (n_ == 0) throw std::invalid_argument("weight matrix must be nonempty");
  if (entries_.size() != n_ * n_)
    throw std::invalid_argument("weight matrix must be square");
  if (users_.size() != n_)
    throw std::invalid_argument("weight matrix needs one user label per column");
  for (double e : entries_) {
    if (!(e > 0.0) || !std::isfinite(e))
      throw std::invalid_argument("weight matrix entries must be positive and finite");
  }
}

WeightMatrix WeightMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> entries;
  entries.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("weight matrix must be square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  std::vector<UserId> users(n);
  for (std::size_t c = 0; c < n; ++c) users[c] = c;
  return WeightMatrix(n, std::move(entries), std::move(users));
}

std::size_t WeightMatrix::column_of(UserId user) const {
  auto it = std::find(users_.begin(), users_.end(), user);
  return static_cast<std::size_t>(it - users_.begin());
}

WeightMatrix WeightMatrix::scaled(double factor) const {
  std::vector<double> entries = entries_;
  for (double& e : entries) e *= factor;
  return WeightMatrix(n_, std::move(entries), users_);
}

WeightTable::WeightTable(const ProblemInstance& instance)
    : n_subbands_(instance.n_subbands()), weights_(instance.n_users() * n_subbands_) {
  for (const UserProfile& u : instance.users()) {
    for (SubbandIndex n = 0; n < n_subbands_; ++n)
      weights_[u.id * n_subbands_ + n] = 1.0 / per_bit_cost(u, n, instance);
  }
}

WeightMatrix build_weight_matrix(std::span<const UserId> scheduled,
                                 const ProblemInstance& instance) {
  return build_weight_matrix(scheduled, WeightTable(instance));
}

WeightMatrix build_weight_matrix(std::span<const UserId> scheduled, const WeightTable& table) {
  const std::size_t n = table.n_subbands();
  if (scheduled.size() != n) {
    throw std::invalid_argument("scheduled set has " + std::to_string(scheduled.size()) +
                                " users; exactly N = " + std::to_string(n) + " required");
  }
  std::vector<UserId> users(scheduled.begin(), scheduled.end());
  std::sort(users.begin(), users.end());
  if (std::adjacent_find(users.begin(), users.end()) != users.end())
    throw std::invalid_argument("scheduled set contains a duplicate user");
  std::vector<double> entries(n * n);
  for (SubbandIndex row = 0; row < n; ++row) {
    for (std::size_t col = 0; col < n; ++col) entries[row * n + col] = table.weight(users[col], row);
  }
  return WeightMatrix(n, std::move(entries), std::move(users));
}

Assignment hungarian_assign(const WeightMatrix& weights) {
  const std::size_t n = weights.size();
  const std::vector<double> cost = normalized_costs(weights);
  const double inf = std::numeric_limits<double>::infinity();

  // 1-based potentials formulation; column 0 is the virtual root.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> col_of_row(n);
  for (std::size_t j = 1; j <= n; ++j) col_of_row[row_of[j] - 1] = j - 1;

  // Every pairing inside the tight (zero reduced cost) graph is optimal.
  BoolGrid tight(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const double reduced = cost[r * n + c] - u[r + 1] - v[c + 1];
      tight(r, c) = reduced <= kZeroTolerance ? 1 : 0;
    }
    tight(r, col_of_row[r]) = 1;
  }
  make_lex_smallest(tight, col_of_row);
  return to_assignment(weights, col_of_row);
}

Assignment hungarian_reduce(const WeightMatrix& weights) {
  const std::size_t n = weights.size();
  std::vector<double> m = normalized_costs(weights);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return m[r * n + c]; };

  for (std::size_t r = 0; r < n; ++r) {
    double lo = at(r, 0);
    for (std::size_t c = 1; c < n; ++c) lo = std::min(lo, at(r, c));
    for (std::size_t c = 0; c < n; ++c) at(r, c) -= lo;
  }
  for (std::size_t c = 0; c < n; ++c) {
    double lo = at(0, c);
    for (std::size_t r = 1; r < n; ++r) lo = std::min(lo, at(r, c));
    for (std::size_t r = 0; r < n; ++r) at(r, c) -= lo;
  }

  auto zero_graph = [&] {
    BoolGrid zeros(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) zeros(r, c) = at(r, c) <= kZeroTolerance ? 1 : 0;
    return zeros;
  };

  for (;;) {
    const BoolGrid zeros = zero_graph();
    std::size_t lines = 0;
    const std::vector<std::size_t> row_of_col = max_matching(zeros, lines);
    if (lines == n) break;

    // Koenig: from unmatched rows walk alternating paths (zero edge to a
    // column, matched edge back to a row). Minimum cover = unreached rows plus
    // reached columns.
    std::vector<std::size_t> col_of_row(n, n);
    for (std::size_t c = 0; c < n; ++c)
      if (row_of_col[c] != n) col_of_row[row_of_col[c]] = c;
    std::vector<char> row_reached(n, 0), col_reached(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t r = 0; r < n; ++r) {
      if (col_of_row[r] == n) {
        row_reached[r] = 1;
        stack.push_back(r);
      }
    }
    while (!stack.empty()) {
      const std::size_t r = stack.back();
      stack.pop_back();
      for (std::size_t c = 0; c < n; ++c) {
        if (!zeros(r, c) || col_reached[c]) continue;
        col_reached[c] = 1;
        const std::size_t next = row_of_col[c];
        if (next != n && !row_reached[next]) {
          row_reached[next] = 1;
          stack.push_back(next);
        }
      }
    }
    // Row r covered iff !row_reached[r]; column c covered iff col_reached[c].
    double smallest = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < n; ++r) {
      if (!row_reached[r]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!col_reached[c]) smallest = std::min(smallest, at(r, c));
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const bool row_covered = !row_reached[r];
        const bool col_covered = col_reached[c] != 0;
        if (!row_covered && !col_covered) {
          at(r, c) -= smallest;
        } else if (row_covered && col_covered) {
          at(r, c) += smallest;
        }
      }
    }
  }
  const BoolGrid zeros = zero_graph();
  std::size_t matched = 0;
  const std::vector<std::size_t> row_of_col = max_matching(zeros, matched);
  std::vector<std::size_t> col_of_row(n);
  for (std::size_t c = 0; c < n; ++c) col_of_row[row_of_col[c]] = c;
  make_lex_smallest(zeros, col_of_row);
  return to_assignment(weights, col_of_row);
}

double matching_total(const Assignment& assignment, const WeightMatrix& weights) {
  std::vector<double> matched;
  matched.reserve(assignment.size());
  for (const Pair& p : assignment.pairs()) {
    const std::size_t col = weights.column_of(p.user);
    if (p.subband >= weights.size() || col == weights.size())
      throw std::invalid_argument("pairing references a row or user outside the matrix");
    matched.push_back(weights.at(p.subband, col));
  }
  return stable_sum(matched);
}

double matching_latency(const Assignment& assignment, const WeightMatrix& weights,
                        double task_bits) {
  if (assignment.size() != weights.size())
    throw std::invalid_argument("matching latency requires a perfect matching");
  return task_bits / matching_total(assignment, weights);
}

}  // namespace mcs
