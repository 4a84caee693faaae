#pragma once

#include "wkl/error.hpp"
#include "wkl/rings.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace wkl::dihedral_oracle {

// a_k: the alternating word of length k starting with s_a. 1_0 = 2_0, and for
// finite m, 1_m = 2_m; both are stored with a = 1.
struct DElt {
  int a = 1;
  int k = 0;
  friend bool operator<(const DElt& x, const DElt& y) { return std::tie(x.k, x.a) < std::tie(y.k, y.a); }
  friend bool operator==(const DElt& x, const DElt& y) { return x.a == y.a && x.k == y.k; }
};

using TSum = std::map<DElt, Laurent>;  // sum of coeff * T_w
using CSum = std::map<DElt, Laurent>;  // sum of coeff * c_w
using JSum = std::map<DElt, long>;     // sum of coeff * t_w

// Closed-form dihedral results. Shares no code with the generic engines.
class Oracle {
public:
  // m = 0 for the infinite dihedral group
  Oracle(int m, int L1, int L2);

  int m() const { return m_; }
  bool infinite() const { return m_ == 0; }
  int L1() const { return L1_; }
  int L2() const { return L2_; }

  DElt elt(int a, int k) const;
  int length(const DElt& w) const { return w.k; }
  int weight(const DElt& w) const;
  DElt inverse(const DElt& w) const;
  // left multiplication by s_a
  DElt lmul(int a, const DElt& w) const;
  bool ldesc(const DElt& w, int a) const;
  bool leq(const DElt& y, const DElt& w) const { return y == w || y.k < w.k; }
  std::vector<DElt> elements(int max_len) const;
  std::vector<DElt> below(const DElt& w) const;
  std::vector<int> word(const DElt& w) const;  // 1-based letters
  std::string str(const DElt& w) const;        // "2_3", identity "1"

  // Gamma_w (any weights) and Gamma'_w (L2 > L1)
  TSum gamma(const DElt& w) const;
  TSum gamma_prime(const DElt& w) const;
  // c_w as Gamma or Gamma'; UnsupportedWeights when L1 > L2
  TSum c_closed_form(const DElt& w) const;

  // T_{s_a} * h
  TSum t_gen_mul(int a, const TSum& h) const;
  // T_x T_y from the infinite-dihedral multiplication table
  TSum t_product(const DElt& x, const DElt& y) const;

  // c_x c_y in the c-basis; OutOfCoverage when no closed form applies.
  // `source` names the rule that was used.
  CSum product(const DElt& x, const DElt& y, std::string* source = nullptr) const;
  // coefficient of c_{2_{m-1}} in c_{2_{m-1}}^2 (finite even m >= 4, L2 > L1)
  Laurent p0() const;

  // coefficients of the D_{s_1} series up to length trunc_len (L2 > L1)
  TSum d_s1(int trunc_len) const;

  // a-values: infinite m with L2 >= L1, or finite m >= 3
  std::map<DElt, int> a_table(int max_len) const;
  // Delta and the distinguished set (infinite m, L2 > L1)
  std::map<DElt, int> delta_table(int max_len) const;
  std::vector<DElt> dset(int max_len) const;
  // triples (x, y, d) with d distinguished and gamma_{x,y,d} != 0
  std::vector<std::tuple<DElt, DElt, DElt>> gamma_d_triples(int max_len) const;

  // t_x t_y in J: infinite m with L2 > L1, infinite m with L1 = L2 on 2_odd factors,
  // or m = 4 with (L1, L2) = (1, 2). OutOfCoverage otherwise.
  JSum j_product(const DElt& x, const DElt& y) const;

  // left and two-sided cells, each block sorted, blocks ordered by least member
  std::vector<std::vector<DElt>> left_cells(int max_len) const;
  std::vector<std::vector<DElt>> two_sided_cells(int max_len) const;

private:
  void require_unequal(const char* what) const;
  Laurent zeta() const;
  Laurent f(int a) const;
  void add(TSum& s, const DElt& w, const Laurent& c) const;
  CSum product_infinite_unequal(const DElt& x, const DElt& y) const;
  CSum product_gen(int a, const DElt& y, std::string* source) const;
  int m_, L1_, L2_;
};

}  // namespace wkl::dihedral_oracle
