#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "invol/caps.hpp"
#include "invol/exact.hpp"
#include "invol/permutation.hpp"

namespace invol {

// A biword over the alphabet {1..m}: two rows of equal length n, read as the
// multiset of columns (top_i, bottom_i).  It represents a generalized
// involution when the column multiset is symmetric under swapping rows, the
// top row is weakly increasing, and bottom entries under a tied top run are
// weakly decreasing.
struct GeneralizedInvolution {
  std::vector<int> top;
  std::vector<int> bottom;
  int alphabet_size = 0;

  int length() const { return static_cast<int>(top.size()); }
  bool operator==(const GeneralizedInvolution&) const = default;
};

bool is_valid(const GeneralizedInvolution& w);

// Symmetric m x m matrix with nonnegative integer entries, indexed 1-based.
// Writes through set() keep the symmetry; from_rows() validates its input.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int m) : m_(m), cells_(static_cast<std::size_t>(m) * m, 0) {
    if (m < 0) throw std::invalid_argument("SymMatrix: negative dimension");
  }
  static SymMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int dim() const { return m_; }
  long long at(int i, int j) const { return cells_[index(i, j)]; }
  void set(int i, int j, long long value);
  // Sum of all entries.
  long long weight() const;

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const;
  int m_ = 0;
  std::vector<long long> cells_;
};

// Biword -> matrix: M[x][y] counts columns (x, y).  Throws
// std::invalid_argument when the biword is not a generalized involution.
SymMatrix to_matrix(const GeneralizedInvolution& w);

// Matrix -> biword, the inverse direction: for each top letter x in
// increasing order, emit M[x][y] copies of column (x, y) with y decreasing.
GeneralizedInvolution from_matrix(const SymMatrix& m);

// Number of odd diagonal entries of the matrix encoding.
int gfix(const GeneralizedInvolution& w);
int gfix(const SymMatrix& m);

// +1 when (length - gfix)/2 is even, -1 otherwise.
int sign(const GeneralizedInvolution& w);

// Rank-replace the bottom row by the values 1..n: smaller letters get
// smaller ranks, and among equal letters the later occurrence ranks smaller.
// The result is an honest involution in S_n.
Permutation polarize(const GeneralizedInvolution& w);

// Visits every generalized involution of length n over {1..m}, ordered by
// diagonal entries of the matrix encoding first, then the upper off-diagonal
// cells in row-major order.
void for_each_generalized_involution(
    int n, int m, const std::function<void(const GeneralizedInvolution&)>& visit);

std::vector<GeneralizedInvolution> enumerate_generalized_involutions(int n, int m);

struct GenInvCensus {
  Int total = 0;
  Int even = 0;        // objects with sign +1
  Int signed_sum = 0;  // sum of signs
  bool operator==(const GenInvCensus&) const = default;
};

GenInvCensus census(int n, int m);
// Same totals, sharded by the matrix diagonal;  threads <= 1 runs the shards
// sequentially.
GenInvCensus census_parallel(int n, int m, int threads);

// Signed count of generalized involutions by full enumeration.
Int a_hat_bruteforce(int n, int m);

// Groups all generalized involutions of length n over {1..m} by their
// polarization and returns the fiber sizes.
std::map<Permutation, Int> fibers(int n, int m);

}  // namespace invol
