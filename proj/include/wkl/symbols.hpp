#pragma once

#include "wkl/error.hpp"
#include "wkl/rings.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace wkl::symbols {

using Partition = std::vector<int>;  // weakly decreasing, no zeros
using Bipartition = std::pair<Partition, Partition>;

// b = a r + b' with 0 <= b' < a
struct Params {
  int a = 1, b = 0, r = 0, bp = 0;
  static Params make(int a, int b);
};

// A multiset of 2N + r nonnegative integers, sorted.
struct Multiset {
  Params p;
  int N = 0;
  std::vector<int> entries;

  bool valid() const;
  std::vector<int> singles() const;
  std::vector<int> doubles() const;
};

int rank(const Multiset& m);
Multiset shift(const Multiset& m);
// all multisets of rank n with the given N
std::vector<Multiset> enumerate_multisets(int a, int b, int n, int N);
// the rank-0 staircase
Multiset staircase(int a, int b, int N);

// Two strictly increasing rows: top has N + r entries (congruent to b' mod a),
// bottom has N entries (divisible by a).
struct Symbol {
  Params p;
  std::vector<int> top, bottom;

  int N() const { return static_cast<int>(bottom.size()); }
  bool valid() const;
  std::string str() const;  // "0,2,5/1,3"
  static Symbol parse(const std::string& s, int a, int b);
  Multiset multiset() const;
  friend bool operator==(const Symbol& x, const Symbol& y) { return x.top == y.top && x.bottom == y.bottom; }
  friend bool operator<(const Symbol& x, const Symbol& y) {
    return std::tie(x.top, x.bottom) < std::tie(y.top, y.bottom);
  }
};

int rank(const Symbol& s);
Symbol shift(const Symbol& s);
// smallest N for which the bipartition fits
int min_n(const Bipartition& ab, int a, int b);
// RankMismatch when N is too small for the bipartition
Symbol bipartition_to_symbol(const Bipartition& ab, int a, int b, int N);
Symbol bipartition_to_symbol(const Bipartition& ab, int a, int b);
// RankMismatch when the rows do not form a symbol
Bipartition symbol_to_bipartition(const Symbol& s);

// TTooSmall unless {a t + b' - z} fits inside the two staircases up to t
Multiset complement(const Multiset& m, int t);
Symbol complement_symbol(const Symbol& s, int t);

// A_N - B_N, checked to be unchanged under shift
long a_symbol(const Symbol& s);
long f_symbol(const Symbol& s);
// generic-degree product, q = v^{2a}, y = v^{2b}
Laurent hoefsmit_f(const Bipartition& ab, int a, int b);

// r-admissible involutions of {0..M-1}; inv[i] is the partner of i. ParityMismatch
// unless 0 <= r <= M and M = r mod 2.
std::vector<std::vector<int>> admissible_involutions(int M, int r);
// subsets (as sorted index lists) with one element in each 2-element orbit
std::vector<std::vector<int>> s_iota(const std::vector<int>& inv);
// the symbols Lambda_Y for Y in S_iota, where iota acts on the singles of m (b' = 0)
std::vector<Symbol> constructible_family(const Multiset& m, const std::vector<int>& inv);
// every constructible family of rank n (b' = 0), each sorted, deduplicated
std::vector<std::vector<Symbol>> families(int a, int b, int n);
// connectivity of the graph on (M - r)/2-subsets joined through a common S_iota
bool involution_graph_connected(int M, int r);

// sum_i a * binom(alpha'_i, 2)
long a_partition(const Partition& alpha, int a);
Partition dual(const Partition& alpha);
std::vector<Partition> partitions(int n);
std::vector<Bipartition> bipartitions(int n);
std::string bipartition_str(const Bipartition& ab);

}  // namespace wkl::symbols
