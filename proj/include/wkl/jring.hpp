#pragma once

#include "wkl/afun.hpp"

namespace wkl {

// Finite linear combination of t_z (z a region id) with coefficients in C.
template <class C>
struct JElement {
  std::map<int, C> terms;

  void add(int z, const C& c) {
    if (c == C(0)) return;
    auto [it, fresh] = terms.emplace(z, c);
    if (!fresh) {
      it->second += c;
      if (it->second == C(0)) terms.erase(it);
    }
  }
  C coeff(int z) const {
    auto it = terms.find(z);
    return it == terms.end() ? C(0) : it->second;
  }
  bool operator==(const JElement& o) const { return terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
};

using JZ = JElement<long>;     // J over Z
using JA = JElement<Laurent>;  // J_A = A (x) J

// The ring J on a window: structure constants gamma, unit, n-hat and phi.
class JTable {
public:
  explicit JTable(const Analysis& an);

  const Analysis& analysis() const { return *an_; }
  // ids < range() are allowed as factors
  int range() const { return range_; }
  const std::vector<int>& dset() const { return dset_; }
  long n_hat(int z) const;

  // t_x t_y; UncertifiedRegion when a needed gamma is not determined
  const JZ& product(int x, int y) const;
  JZ mul(const JZ& a, const JZ& b) const;
  JA mul(const JA& a, const JA& b) const;
  JZ unit() const;

  // phi(c_x^dagger)
  JA phi_dagger(int x) const;
  // verifies the direct-sum decomposition over two-sided cells; returns blocks with units
  struct Block {
    std::vector<int> members;
    JZ unit;
  };
  std::vector<Block> decomposition() const;

  nlohmann::json to_json() const;

private:
  const Analysis* an_;
  int range_;
  std::vector<int> dset_;
  std::vector<int> nhat_;
  std::vector<JZ> prod_;  // [x * range + y]
};

}  // namespace wkl
