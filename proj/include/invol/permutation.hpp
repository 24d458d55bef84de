#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "invol/caps.hpp"
#include "invol/exact.hpp"

namespace invol {

// A permutation of S_n in one-line notation: a word on {1..n} containing each
// value exactly once. The empty permutation (n = 0) is legal.
class Permutation {
 public:
  Permutation() = default;
  // Validates bijectivity; throws std::invalid_argument on a malformed word.
  explicit Permutation(std::vector<int> word);
  // Trusted path for enumerators that construct valid words by design.
  static Permutation unchecked(std::vector<int> word);

  int size() const { return static_cast<int>(word_.size()); }
  // 1-based application: p(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& word() const { return word_; }

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& other) const { return word_ < other.word_; }

 private:
  std::vector<int> word_;
};

// Statistics on raw one-line words. Enumeration loops work on words directly;
// the Permutation overloads below are the public face.
int rises(std::span<const int> word);
int descents(std::span<const int> word);
int fixed_points(std::span<const int> word);
bool is_involution(std::span<const int> word);
// (-1)^inversions.
int sign_permutation(std::span<const int> word);
// (-1)^((n - fix)/2); throws std::invalid_argument on a non-involution.
int sign_involution(std::span<const int> word);

inline int rises(const Permutation& p) { return rises(std::span<const int>(p.word())); }
inline int descents(const Permutation& p) { return descents(std::span<const int>(p.word())); }
inline int fixed_points(const Permutation& p) { return fixed_points(std::span<const int>(p.word())); }
inline bool is_involution(const Permutation& p) { return is_involution(std::span<const int>(p.word())); }
inline int sign_permutation(const Permutation& p) { return sign_permutation(std::span<const int>(p.word())); }
inline int sign_involution(const Permutation& p) { return sign_involution(std::span<const int>(p.word())); }

// Visits the one-line word of every involution of S_n exactly once, in
// lexicographic order of the word. Not cap-checked; callers that expose
// enumeration to uncontrolled input go through enumerate_involutions.
void for_each_involution(int n, const std::function<void(const std::vector<int>&)>& visit);

// Visits every word of S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& visit);

// Materialized involution list in lexicographic order; cap-checked.
std::vector<Permutation> enumerate_involutions(int n);

// |I_n| by direct enumeration; cap-checked.
Int count_involutions_brute(int n);

// Coefficient tables over S_n or over involutions, indexed by a statistic.
enum class StatKind {
  eulerian_a,         // permutations by descents
  signed_b,           // sign-weighted permutations by rises
  involution_f,       // sign-weighted involutions by rises
  involution_f_plus,  // even involutions by rises
  involution_f_minus  // odd involutions by rises
};

// Exact table k -> value for 0 <= k <= max(n-1, 0).
struct StatTable {
  int n = 0;
  StatKind kind = StatKind::eulerian_a;
  std::vector<Int> entries;

  bool operator==(const StatTable&) const = default;
};

// Full-enumeration oracle table. Serial reference implementation.
// Caps: symmetric_group for the S_n kinds, involutions for the rest.
StatTable brute_stat_table(int n, StatKind kind);

// Same table computed from enumeration shards (first-letter prefix) merged in
// order; runs the shards on OpenMP threads. Equal to the serial table.
StatTable brute_stat_table_parallel(int n, StatKind kind, int threads);

// One involution sweep yielding both halves of the signed table:
// (even-involution counts, odd-involution counts) by rises.
std::pair<StatTable, StatTable> brute_f_split(int n);

}  // namespace invol
