#include "invol/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invol {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<int> sorted = word_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1)
      throw std::invalid_argument("Permutation: word is not a bijection on {1..n}");
  }
}

Permutation Permutation::unchecked(std::vector<int> word) {
  Permutation p;
  p.word_ = std::move(word);
  return p;
}

int rises(std::span<const int> word) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] < word[i + 1]) ++count;
  return count;
}

int descents(std::span<const int> word) {
  int count = 0;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) ++count;
  return count;
}

int fixed_points(std::span<const int> word) {
  int count = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] == static_cast<int>(i) + 1) ++count;
  return count;
}

bool is_involution(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  for (int i = 0; i < n; ++i) {
    const int j = word[i];
    if (j < 1 || j > n || word[j - 1] != i + 1) return false;
  }
  return true;
}

int sign_permutation(std::span<const int> word) {
  long long inversions = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j)
      if (word[i] > word[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

int sign_involution(std::span<const int> word) {
  if (!is_involution(word))
    throw std::invalid_argument("sign_involution: word is not an involution");
  const int moved = static_cast<int>(word.size()) - fixed_points(word);
  return (moved / 2) % 2 == 0 ? 1 : -1;
}

namespace {

// Extends a partially built involution word. Positions hold 0 when
// unassigned; `from` is a lower bound for the first unassigned position.
// Trying the fixed point first and larger partners in increasing order yields
// the words in lexicographic order.
void involutions_rec(std::vector<int>& word, int from,
                     const std::function<void(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(word.size());
  int i = 0;
  for (int p = from; p <= n; ++p) {
    if (word[p - 1] == 0) {
      i = p;
      break;
    }
  }
  if (i == 0) {
    visit(word);
    return;
  }
  word[i - 1] = i;
  involutions_rec(word, i + 1, visit);
  word[i - 1] = 0;
  for (int j = i + 1; j <= n; ++j) {
    if (word[j - 1] != 0) continue;
    word[i - 1] = j;
    word[j - 1] = i;
    involutions_rec(word, i + 1, visit);
    word[i - 1] = 0;
    word[j - 1] = 0;
  }
}

void check_cap(int n, int cap, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative size");
  if (n > cap)
    throw cap_exceeded(std::string(what) + ": n=" + std::to_string(n) +
                       " exceeds cap " + std::to_string(cap));
}

}  // namespace

void for_each_involution(int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_involution: negative size");
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  involutions_rec(word, 1, visit);
}

void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_permutation: negative size");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  do {
    visit(word);
  } while (std::next_permutation(word.begin(), word.end()));
}

std::vector<Permutation> enumerate_involutions(int n) {
  check_cap(n, caps().involutions, "enumerate_involutions");
  std::vector<Permutation> out;
  for_each_involution(n, [&](const std::vector<int>& w) { out.push_back(Permutation::unchecked(w)); });
  return out;
}

Int count_involutions_brute(int n) {
  check_cap(n, caps().involutions, "count_involutions_brute");
  Int count = 0;
  for_each_involution(n, [&](const std::vector<int>&) { ++count; });
  return count;
}

namespace {

std::size_t table_size(int n) { return static_cast<std::size_t>(std::max(n - 1, 0)) + 1; }

void tally_sn(std::vector<Int>& table, StatKind kind, const std::vector<int>& w) {
  if (kind == StatKind::eulerian_a) {
    table[static_cast<std::size_t>(descents(w))] += 1;
  } else {
    table[static_cast<std::size_t>(rises(w))] += sign_permutation(w);
  }
}

void tally_involution(std::vector<Int>& plus, std::vector<Int>& minus, const std::vector<int>& w) {
  const int moved = static_cast<int>(w.size()) - fixed_points(std::span<const int>(w));
  auto& side = (moved / 2) % 2 == 0 ? plus : minus;
  side[static_cast<std::size_t>(rises(std::span<const int>(w)))] += 1;
}

StatTable from_split(int n, StatKind kind, const std::vector<Int>& plus, const std::vector<Int>& minus) {
  StatTable t{n, kind, {}};
  t.entries.resize(table_size(n));
  for (std::size_t k = 0; k < t.entries.size(); ++k) {
    switch (kind) {
      case StatKind::involution_f: t.entries[k] = plus[k] - minus[k]; break;
      case StatKind::involution_f_plus: t.entries[k] = plus[k]; break;
      default: t.entries[k] = minus[k]; break;
    }
  }
  return t;
}

}  // namespace

std::pair<StatTable, StatTable> brute_f_split(int n) {
  check_cap(n, caps().involutions, "brute_f_split");
  std::vector<Int> plus(table_size(n)), minus(table_size(n));
  for_each_involution(n, [&](const std::vector<int>& w) { tally_involution(plus, minus, w); });
  return {from_split(n, StatKind::involution_f_plus, plus, minus),
          from_split(n, StatKind::involution_f_minus, plus, minus)};
}

StatTable brute_stat_table(int n, StatKind kind) {
  if (kind == StatKind::eulerian_a || kind == StatKind::signed_b) {
    check_cap(n, caps().symmetric_group, "brute_stat_table");
    StatTable t{n, kind, {}};
    t.entries.resize(table_size(n));
    for_each_permutation(n, [&](const std::vector<int>& w) { tally_sn(t.entries, kind, w); });
    return t;
  }
  check_cap(n, caps().involutions, "brute_stat_table");
  std::vector<Int> plus(table_size(n)), minus(table_size(n));
  for_each_involution(n, [&](const std::vector<int>& w) { tally_involution(plus, minus, w); });
  return from_split(n, kind, plus, minus);
}

StatTable brute_stat_table_parallel(int n, StatKind kind, int threads) {
  const bool over_sn = kind == StatKind::eulerian_a || kind == StatKind::signed_b;
  check_cap(n, over_sn ? caps().symmetric_group : caps().involutions, "brute_stat_table_parallel");
  if (n == 0) return brute_stat_table(n, kind);

  // One shard per choice of the word's first letter; each shard enumerates
  // independently and the shard tables merge in first-letter order.
  const int shards = n;
  std::vector<std::vector<Int>> plus(shards), minus(shards);
  for (int s = 0; s < shards; ++s) {
    plus[s].resize(table_size(n));
    minus[s].resize(table_size(n));
  }

  auto run_shard = [&](int s) {
    const int first = s + 1;
    if (over_sn) {
      std::vector<int> word(static_cast<std::size_t>(n));
      word[0] = first;
      int next = 0;
      for (int v = 1; v <= n; ++v)
        if (v != first) word[static_cast<std::size_t>(++next)] = v;
      do {
        tally_sn(plus[s], kind, word);
      } while (std::next_permutation(word.begin() + 1, word.end()));
    } else {
      std::vector<int> word(static_cast<std::size_t>(n), 0);
      word[0] = first;
      if (first != 1) word[static_cast<std::size_t>(first) - 1] = 1;
      involutions_rec(word, 2, [&](const std::vector<int>& w) { tally_involution(plus[s], minus[s], w); });
    }
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

  std::vector<Int> total_plus(table_size(n)), total_minus(table_size(n));
  for (int s = 0; s < shards; ++s) {
    for (std::size_t k = 0; k < total_plus.size(); ++k) {
      total_plus[k] += plus[s][k];
      total_minus[k] += minus[s][k];
    }
  }
  if (over_sn) {
    StatTable t{n, kind, std::move(total_plus)};
    return t;
  }
  return from_split(n, kind, total_plus, total_minus);
}

}  // namespace invol
