#include "invol/geninv.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invol {

bool is_valid(const GeneralizedInvolution& w) {
  if (w.top.size() != w.bottom.size()) return false;
  if (w.alphabet_size < 0) return false;
  const int n = w.length();
  const int m = w.alphabet_size;
  for (int i = 0; i < n; ++i) {
    if (w.top[i] < 1 || w.top[i] > m) return false;
    if (w.bottom[i] < 1 || w.bottom[i] > m) return false;
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (w.top[i] > w.top[i + 1]) return false;
    if (w.top[i] == w.top[i + 1] && w.bottom[i] < w.bottom[i + 1]) return false;
  }
  // The column multiset must be closed under swapping the two rows.
  std::map<std::pair<int, int>, long long> columns;
  for (int i = 0; i < n; ++i) ++columns[{w.top[i], w.bottom[i]}];
  for (const auto& [cell, count] : columns) {
    auto it = columns.find({cell.second, cell.first});
    if (it == columns.end() || it->second != count) return false;
  }
  return true;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const int m = static_cast<int>(rows.size());
  SymMatrix out(m);
  for (int i = 1; i <= m; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != m)
      throw std::invalid_argument("SymMatrix::from_rows: not square");
    for (int j = 1; j <= m; ++j) {
      const long long v = rows[i - 1][j - 1];
      if (v < 0) throw std::invalid_argument("SymMatrix::from_rows: negative entry");
      if (rows[j - 1][i - 1] != v)
        throw std::invalid_argument("SymMatrix::from_rows: not symmetric");
      out.cells_[out.index(i, j)] = v;
    }
  }
  return out;
}

std::size_t SymMatrix::index(int i, int j) const {
  if (i < 1 || i > m_ || j < 1 || j > m_)
    throw std::out_of_range("SymMatrix: index out of range");
  return static_cast<std::size_t>(i - 1) * m_ + (j - 1);
}

void SymMatrix::set(int i, int j, long long value) {
  if (value < 0) throw std::invalid_argument("SymMatrix::set: negative entry");
  cells_[index(i, j)] = value;
  cells_[index(j, i)] = value;
}

long long SymMatrix::weight() const {
  return std::accumulate(cells_.begin(), cells_.end(), 0LL);
}

SymMatrix to_matrix(const GeneralizedInvolution& w) {
  if (!is_valid(w))
    throw std::invalid_argument("to_matrix: biword is not a generalized involution");
  std::vector<std::vector<long long>> rows(
      static_cast<std::size_t>(w.alphabet_size),
      std::vector<long long>(static_cast<std::size_t>(w.alphabet_size), 0));
  for (int i = 0; i < w.length(); ++i) ++rows[w.top[i] - 1][w.bottom[i] - 1];
  return SymMatrix::from_rows(rows);
}

GeneralizedInvolution from_matrix(const SymMatrix& m) {
  GeneralizedInvolution w;
  w.alphabet_size = m.dim();
  for (int x = 1; x <= m.dim(); ++x) {
    for (int y = m.dim(); y >= 1; --y) {
      for (long long c = 0; c < m.at(x, y); ++c) {
        w.top.push_back(x);
        w.bottom.push_back(y);
      }
    }
  }
  return w;
}

int gfix(const SymMatrix& m) {
  int count = 0;
  for (int i = 1; i <= m.dim(); ++i)
    if (m.at(i, i) % 2 != 0) ++count;
  return count;
}

int gfix(const GeneralizedInvolution& w) { return gfix(to_matrix(w)); }

int sign(const GeneralizedInvolution& w) {
  const int moved = w.length() - gfix(w);
  return (moved / 2) % 2 == 0 ? 1 : -1;
}

Permutation polarize(const GeneralizedInvolution& w) {
  const int n = w.length();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  // Smaller letters rank first; among equal letters the later position wins
  // the smaller rank.
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (w.bottom[a] != w.bottom[b]) return w.bottom[a] < w.bottom[b];
    return a > b;
  });
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) word[order[r]] = r + 1;
  return Permutation::unchecked(std::move(word));
}

namespace {

std::vector<std::pair<int, int>> upper_pairs(int m) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) pairs.emplace_back(i, j);
  return pairs;
}

// Enumerates assignments of the upper off-diagonal cells whose values sum to
// `budget`, invoking the leaf callback at each complete assignment.
void off_diag_rec(std::vector<long long>& off, std::size_t p, long long budget,
                  const std::function<void()>& leaf) {
  if (p == off.size()) {
    if (budget == 0) leaf();
    return;
  }
  if (p + 1 == off.size()) {
    off[p] = budget;
    leaf();
    off[p] = 0;
    return;
  }
  for (long long v = 0; v <= budget; ++v) {
    off[p] = v;
    off_diag_rec(off, p + 1, budget - v, leaf);
  }
  off[p] = 0;
}

// Enumerates diagonal vectors (d_1..d_m) with sum at most n and n - sum even,
// calling leaf(diag, remaining_pair_budget).
void diag_rec(std::vector<long long>& diag, int i, long long remaining,
              const std::function<void(long long)>& leaf) {
  const int m = static_cast<int>(diag.size());
  if (i == m) {
    if (remaining % 2 == 0) leaf(remaining / 2);
    return;
  }
  for (long long v = 0; v <= remaining; ++v) {
    diag[static_cast<std::size_t>(i)] = v;
    diag_rec(diag, i + 1, remaining - v, leaf);
  }
  diag[static_cast<std::size_t>(i)] = 0;
}

SymMatrix assemble(int m, const std::vector<long long>& diag,
                   const std::vector<std::pair<int, int>>& pairs,
                   const std::vector<long long>& off) {
  SymMatrix out(m);
  for (int i = 1; i <= m; ++i) out.set(i, i, diag[static_cast<std::size_t>(i) - 1]);
  for (std::size_t p = 0; p < pairs.size(); ++p) out.set(pairs[p].first, pairs[p].second, off[p]);
  return out;
}

void check_geninv_caps(int n, int m, const char* what) {
  if (n < 0 || m < 0) throw std::invalid_argument(std::string(what) + ": negative size");
  if (n > caps().geninv_length)
    throw cap_exceeded(std::string(what) + ": n=" + std::to_string(n) + " exceeds cap " +
                       std::to_string(caps().geninv_length));
  if (m > caps().geninv_alphabet)
    throw cap_exceeded(std::string(what) + ": m=" + std::to_string(m) + " exceeds cap " +
                       std::to_string(caps().geninv_alphabet));
}

}  // namespace

void for_each_generalized_involution(
    int n, int m, const std::function<void(const GeneralizedInvolution&)>& visit) {
  if (n < 0 || m < 0)
    throw std::invalid_argument("for_each_generalized_involution: negative size");
  const auto pairs = upper_pairs(m);
  std::vector<long long> diag(static_cast<std::size_t>(m), 0);
  std::vector<long long> off(pairs.size(), 0);
  diag_rec(diag, 0, n, [&](long long budget) {
    off_diag_rec(off, 0, budget, [&] { visit(from_matrix(assemble(m, diag, pairs, off))); });
  });
}

std::vector<GeneralizedInvolution> enumerate_generalized_involutions(int n, int m) {
  check_geninv_caps(n, m, "enumerate_generalized_involutions");
  std::vector<GeneralizedInvolution> out;
  for_each_generalized_involution(n, m, [&](const GeneralizedInvolution& w) { out.push_back(w); });
  return out;
}

namespace {

void census_tally(GenInvCensus& c, int n, const std::vector<long long>& diag) {
  int odd = 0;
  for (long long d : diag)
    if (d % 2 != 0) ++odd;
  const int s = ((n - odd) / 2) % 2 == 0 ? 1 : -1;
  c.total += 1;
  if (s > 0) c.even += 1;
  c.signed_sum += s;
}

}  // namespace

GenInvCensus census(int n, int m) {
  check_geninv_caps(n, m, "census");
  GenInvCensus c;
  const auto pairs = upper_pairs(m);
  std::vector<long long> diag(static_cast<std::size_t>(m), 0);
  std::vector<long long> off(pairs.size(), 0);
  diag_rec(diag, 0, n, [&](long long budget) {
    off_diag_rec(off, 0, budget, [&] { census_tally(c, n, diag); });
  });
  return c;
}

GenInvCensus census_parallel(int n, int m, int threads) {
  check_geninv_caps(n, m, "census_parallel");
  // Shard by diagonal vector: collect the diagonals up front, then complete
  // each one independently over the off-diagonal cells.
  std::vector<std::vector<long long>> diagonals;
  {
    std::vector<long long> diag(static_cast<std::size_t>(m), 0);
    diag_rec(diag, 0, n, [&](long long) { diagonals.push_back(diag); });
  }
  const int shards = static_cast<int>(diagonals.size());
  std::vector<GenInvCensus> slots(static_cast<std::size_t>(shards));
  const auto pairs = upper_pairs(m);

  auto run_shard = [&](int s) {
    const auto& diag = diagonals[static_cast<std::size_t>(s)];
    const long long used = std::accumulate(diag.begin(), diag.end(), 0LL);
    std::vector<long long> off(pairs.size(), 0);
    off_diag_rec(off, 0, (n - used) / 2,
                 [&] { census_tally(slots[static_cast<std::size_t>(s)], n, diag); });
  };

  if (threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (int s = 0; s < shards; ++s) run_shard(s);
#else
    for (int s = 0; s < shards; ++s) run_shard(s);
#endif
  } else {
    for (int s = 0; s < shards; ++s) run_shard(s);
  }

  GenInvCensus c;
  for (const auto& slot : slots) {
    c.total += slot.total;
    c.even += slot.even;
    c.signed_sum += slot.signed_sum;
  }
  return c;
}

Int a_hat_bruteforce(int n, int m) { return census(n, m).signed_sum; }

std::map<Permutation, Int> fibers(int n, int m) {
  check_geninv_caps(n, m, "fibers");
  std::map<Permutation, Int> out;
  for_each_generalized_involution(
      n, m, [&](const GeneralizedInvolution& w) { out[polarize(w)] += 1; });
  return out;
}

}  // namespace invol
