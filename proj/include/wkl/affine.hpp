#pragma once

#include "wkl/coxeter.hpp"

#include <functional>
#include <vector>

namespace wkl {

// A permutation sigma of Z with sigma(z + n) = sigma(z) + n, stored by its window
// sigma(1), ..., sigma(n).
struct PeriodicPerm {
  int n = 0;
  std::vector<long> win;

  static PeriodicPerm identity(int n);
  // NotPeriodic if the window is not a bijection modulo n.
  static PeriodicPerm from_window(std::vector<long> win);
  // Samples f on [lo, hi] and checks f(z + n) = f(z) + n there.
  static PeriodicPerm from_function(int n, const std::function<long(long)>& f, long lo = -20,
                                    long hi = 20);

  long operator()(long z) const;
  PeriodicPerm compose(const PeriodicPerm& b) const;  // (this o b)(z) = this(b(z))
  PeriodicPerm inverse() const;
  bool operator==(const PeriodicPerm& o) const { return win == o.win; }
};

// sum over k in [1,n] of sigma(k) - k
long chi(const PeriodicPerm& s);
// number of tau_n-orbits on {(i,j): i<j, sigma(i) > sigma(j)}
long inversion_orbits(const PeriodicPerm& s);
// orbits with i + j = 1 mod n (used by the type C model)
long inversion_orbits_odd(const PeriodicPerm& s);

PeriodicPerm affine_a_gen(int n, int m);  // s_m, m in Z/nZ
PeriodicPerm affine_a_perm(int n, const Word& w);

struct RoundTrip {
  Element elt;
  int length;
};
// W must be an affA:n system (either engine). Errors: NotPeriodic, NonzeroChi.
RoundTrip affine_perm_roundtrip(const CoxeterSystem& W, const PeriodicPerm& sigma);

// Type C~_p inside affine A_{2p-1}: permutations commuting with z -> 1 - z.
PeriodicPerm affine_c_gen(int p, int i);  // s'_i, i in [0, p]
PeriodicPerm affine_c_perm(int p, const Word& w);
bool commutes_with_reflection(const PeriodicPerm& s);
struct CLengths {
  long l0 = 0, lp = 0, lpp = 0;  // l^0, l', l''
  long total() const { return l0 + lp + lpp; }
};
CLengths c_lengths(const PeriodicPerm& s);
// kernels of chi' = (-1)^{l'} and chi'' = (-1)^{l''}: the B~ and D~ submodels
bool in_kernel_chi1(const PeriodicPerm& s);
bool in_kernel_chi2(const PeriodicPerm& s);

}  // namespace wkl
