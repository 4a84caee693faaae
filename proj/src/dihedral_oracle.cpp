#include "wkl/dihedral_oracle.hpp"

#include <algorithm>

namespace wkl::dihedral_oracle {

namespace {

// 1 - v^{2L} + v^{4L} - ... + (-1)^s v^{2sL}
Laurent alt_sum(int s, int L) {
  Laurent r;
  for (int j = 0; j <= s; ++j) r += Laurent::monomial(2 * j * L, j % 2 ? -1 : 1);
  return r;
}

int other(int a) { return 3 - a; }

}  // namespace

Oracle::Oracle(int m, int L1, int L2) : m_(m), L1_(L1), L2_(L2) {
  if (m < 0 || m == 1) throw Error("UsageError", "m must be 0 (infinity) or >= 2");
  if (L1 <= 0 || L2 <= 0) throw Error("NonPositiveWeight", "dihedral closed forms need L1, L2 > 0");
  if (m % 2 == 1 && L1 != L2) throw Error("OddBondWeightMismatch", "odd m forces L1 = L2");
}

DElt Oracle::elt(int a, int k) const {
  if (a != 1 && a != 2) throw Error("UsageError", "generator index must be 1 or 2");
  if (k < 0 || (!infinite() && k > m_)) throw Error("OutOfCoverage", "no element of that length");
  if (k == 0 || (!infinite() && k == m_)) a = 1;
  return {a, k};
}

int Oracle::weight(const DElt& w) const {
  int La = w.a == 1 ? L1_ : L2_, Lb = w.a == 1 ? L2_ : L1_;
  return (w.k + 1) / 2 * La + w.k / 2 * Lb;
}

DElt Oracle::inverse(const DElt& w) const {
  if (w.k % 2 == 1) return w;
  return elt(other(w.a), w.k);
}

bool Oracle::ldesc(const DElt& w, int a) const {
  return w.k >= 1 && (w.a == a || (!infinite() && w.k == m_));
}

DElt Oracle::lmul(int a, const DElt& w) const {
  if (ldesc(w, a)) return elt(other(a), w.k - 1);
  return elt(a, w.k + 1);
}

std::vector<DElt> Oracle::elements(int max_len) const {
  if (max_len < 0) return {};
  std::vector<DElt> out{{1, 0}};
  int top = infinite() ? max_len : std::min(max_len, m_);
  for (int k = 1; k <= top; ++k) {
    out.push_back({1, k});
    if (infinite() || k < m_) out.push_back({2, k});
  }
  return out;
}

std::vector<DElt> Oracle::below(const DElt& w) const {
  std::vector<DElt> out = elements(w.k - 1);
  out.push_back(w);
  return out;
}

std::vector<int> Oracle::word(const DElt& w) const {
  std::vector<int> out;
  for (int i = 0; i < w.k; ++i) out.push_back(i % 2 ? other(w.a) : w.a);
  return out;
}

std::string Oracle::str(const DElt& w) const {
  if (w.k == 0) return "1";
  return std::to_string(w.a) + "_" + std::to_string(w.k);
}

void Oracle::add(TSum& s, const DElt& w, const Laurent& c) const {
  if (c.is_zero()) return;
  Laurent& t = s[w];
  t += c;
  if (t.is_zero()) s.erase(w);
}

Laurent Oracle::zeta() const { return Laurent::sym(L1_ - L2_); }
Laurent Oracle::f(int a) const { return Laurent::sym(a == 1 ? L1_ : L2_); }

void Oracle::require_unequal(const char* what) const {
  if (!(L2_ > L1_)) throw Error("UnsupportedWeights", std::string(what) + " needs L2 > L1");
}

TSum Oracle::gamma(const DElt& w) const {
  TSum r;
  for (const DElt& y : below(w)) add(r, y, Laurent::v(-weight(w) + weight(y)));
  return r;
}

TSum Oracle::gamma_prime(const DElt& w) const {
  require_unequal("Gamma'");
  if (w.k % 2 == 0 || (w.a == 1 && w.k == 1)) return gamma(w);
  TSum r;
  const int K = (w.k - 1) / 2;
  if (w.a == 2) {
    for (int s = 0; s < K; ++s) {
      Laurent c = alt_sum(s, L1_) * Laurent::v(-s * L1_ - s * L2_);
      int j = 2 * K - 2 * s;
      add(r, elt(2, j + 1), c);
      add(r, elt(2, j), c * Laurent::v(-L2_));
      add(r, elt(1, j), c * Laurent::v(-L2_));
      add(r, elt(1, j - 1), c * Laurent::v(-2 * L2_));
    }
    Laurent c = alt_sum(K, L1_) * Laurent::v(-K * L1_ - K * L2_);
    add(r, elt(2, 1), c);
    add(r, elt(1, 0), c * Laurent::v(-L2_));
    return r;
  }
  add(r, elt(1, 2 * K + 1), 1);
  add(r, elt(1, 2 * K), Laurent::v(-L1_));
  add(r, elt(2, 2 * K), Laurent::v(-L1_));
  add(r, elt(2, 2 * K - 1), Laurent::v(-2 * L1_));
  Laurent lift = 1 + Laurent::v(2 * L1_);
  for (const DElt& y : below(elt(1, 2 * K - 1))) add(r, y, Laurent::v(-weight(w) + weight(y)) * lift);
  return r;
}

TSum Oracle::c_closed_form(const DElt& w) const {
  if (L1_ == L2_) return gamma(w);
  require_unequal("closed form for c_w");
  return gamma_prime(w);
}

TSum Oracle::t_gen_mul(int a, const TSum& h) const {
  const int La = a == 1 ? L1_ : L2_;
  TSum r;
  for (auto& [w, c] : h) {
    add(r, lmul(a, w), c);
    if (ldesc(w, a)) add(r, w, c * Laurent::antisym(La));
  }
  return r;
}

TSum Oracle::t_product(const DElt& x, const DElt& y) const {
  if (!infinite()) throw Error("OutOfCoverage", "the T-table is stated for m = infinity");
  if (x.k == 0) return {{y, 1}};
  if (y.k == 0) return {{x, 1}};
  const int a = x.a, k = x.k, b = y.a, kp = y.k;
  if ((b - a - k) % 2 == 0) return {{elt(a, k + kp), 1}};
  // the last letter of x equals the first letter of y: the words cancel down
  DElt xy;
  if (k > kp) {
    xy = elt(a, k - kp);
  } else if (kp > k) {
    xy = elt(k % 2 ? other(b) : b, kp - k);
  }
  TSum r{{xy, 1}};
  for (int u = 1; u <= std::min(k, kp); ++u) {
    Laurent xi = Laurent::antisym((b + u - 1) % 2 ? L1_ : L2_);
    add(r, elt(a, k + kp - 2 * u + 1), xi);
  }
  return r;
}

CSum Oracle::product_gen(int a, const DElt& y, std::string* source) const {
  CSum r;
  if (ldesc(y, a)) {
    if (source) *source = "c_s c_w = (v_s + v_s^-1) c_w";
    add(r, y, f(a));
    return r;
  }
  const int k = y.k;
  if (L1_ == L2_) {
    if (source) *source = "Gamma recursion";
    add(r, elt(a, k + 1), 1);
    if (k >= 2) add(r, elt(a, k - 1), 1);
    return r;
  }
  require_unequal("closed form for c_s c_w");
  if (source) *source = "Gamma' recursion";
  add(r, elt(a, k + 1), 1);
  if (a == 2) {
    if (k >= 2) add(r, elt(2, k - 1), zeta());
    if (k >= 4) add(r, elt(2, k - 3), 1);
  }
  return r;
}

CSum Oracle::product_infinite_unequal(const DElt& x, const DElt& y) const {
  CSum r;
  const int kp = y.k;
  // p_u for c_{2_{2k+1}} c_{1_{k'}}
  auto pu = [&](int k, int kprime, int u) -> Laurent {
    if (u == 0) return 1;
    if (u == 2 * k + 2) return kprime > 2 * k + 3 ? 1 : 0;
    if (u % 2) return kprime > u ? zeta() : Laurent(0);
    return Laurent((kprime > u - 1) + (kprime > u + 1));
  };
  auto put = [&](int a, int idx, const Laurent& c) {
    if (c.is_zero()) return;
    if (idx < 1) throw Error("OutOfCoverage", "closed form produced an index below 1");
    add(r, elt(a, idx), c);
  };
  // c_{2_{2k+1}} c_{2_{k'}}  (a = 2)  or  c_{1_{2k+2}} c_{2_{k'}}  (a = 1, shift 1)
  auto rule_a2 = [&](int a, int k, int shift) {
    for (int u = 0; u <= k && 2 * u <= kp - 1; ++u) put(a, 2 * k + kp + shift - 4 * u, f(2));
  };
  // c_{2_{2k+1}} c_{1_{k'}}  or  c_{1_{2k+2}} c_{1_{k'}}, optionally times f_1
  auto rule_a1 = [&](int a, int k, int kprime, int shift, const Laurent& scale) {
    for (int u = 0; u <= 2 * k + 2; ++u) put(a, kprime + 2 * k + 1 + shift - 2 * u, scale * pu(k, kprime, u));
  };
  const int k = x.k;
  if (x.a == 2 && k % 2 == 1) {
    if (y.a == 2) rule_a2(2, (k - 1) / 2, 0);
    else rule_a1(2, (k - 1) / 2, kp, 0, 1);
  } else if (x.a == 1 && k % 2 == 0) {
    if (y.a == 2) rule_a2(1, (k - 2) / 2, 1);
    else rule_a1(1, (k - 2) / 2, kp, 1, 1);
  } else if (x.a == 2 && k % 2 == 0) {
    // c_{2_{2k+2}} = c_{2_{2k+1}} c_1
    if (y.a == 1) rule_a1(2, (k - 2) / 2, kp, 0, f(1));
    else rule_a1(2, (k - 2) / 2, kp + 1, 0, 1);
  } else if (x.a == 1 && k >= 3) {
    // c_{1_{2k+3}} = c_{1_{2k+2}} c_1
    if (y.a == 1) rule_a1(1, (k - 3) / 2, kp, 1, f(1));
    else rule_a1(1, (k - 3) / 2, kp + 1, 1, 1);
  } else {
    return product_gen(1, y, nullptr);
  }
  return r;
}

CSum Oracle::product(const DElt& x, const DElt& y, std::string* source) const {
  if (x.k == 0) return {{y, 1}};
  if (y.k == 0) return {{x, 1}};
  if (L1_ > L2_) throw Error("UnsupportedWeights", "closed forms are stated for L2 >= L1; swap the generators");
  if (x.k == 1) return product_gen(x.a, y, source);
  if (infinite() && L2_ > L1_) {
    if (source) *source = "infinite dihedral product table";
    return product_infinite_unequal(x, y);
  }
  if (infinite() && x.a == y.a && x.k % 2 && y.k % 2) {
    if (source) *source = "odd-odd product, equal parameters";
    const int k = (x.k - 1) / 2, kp = (y.k - 1) / 2;
    CSum r;
    for (int u = 0; u <= std::min(2 * k, 2 * kp); ++u) add(r, elt(x.a, 2 * k + 2 * kp + 1 - 2 * u), f(x.a));
    return r;
  }
  if (y.k == 1) {
    // c_x c_s is the flat image of c_s c_{x^-1}
    CSum t = product_gen(y.a, inverse(x), source);
    CSum r;
    for (auto& [z, c] : t) add(r, inverse(z), c);
    return r;
  }
  throw Error("OutOfCoverage", "no closed form for c_" + str(x) + " c_" + str(y));
}

Laurent Oracle::p0() const {
  require_unequal("p_0");
  if (infinite() || m_ < 4 || m_ % 2) throw Error("OutOfCoverage", "p_0 is defined for finite even m >= 4");
  const int K = (m_ - 2) / 2, d = L2_ - L1_;
  Laurent s;
  for (int j = 0; j <= K; ++j) s += Laurent::v((K - 2 * j) * d);
  return s * f(2) * Int(K % 2 ? -1 : 1);
}

TSum Oracle::d_s1(int trunc_len) const {
  require_unequal("D_{s_1}");
  TSum r;
  auto put = [&](int a, int k, const Laurent& c) {
    if (k <= trunc_len && (infinite() || k <= m_)) add(r, elt(a, k), c);
  };
  const int K = infinite() ? trunc_len : (m_ - 2) / 2;
  for (int s = 0; s <= K && 2 * s + 1 <= trunc_len; ++s) {
    Laurent c = alt_sum(s, L1_) * Laurent::v(-s * L1_ - s * L2_);
    put(1, 2 * s + 1, c);
    put(2, 2 * s + 2, -c * Laurent::v(-L2_));
    if (!infinite() && s == K) break;
    put(1, 2 * s + 2, -c * Laurent::v(-L2_));
    put(2, 2 * s + 3, c * Laurent::v(-2 * L2_));
  }
  return r;
}

std::map<DElt, int> Oracle::a_table(int max_len) const {
  if (L1_ > L2_) throw Error("UnsupportedWeights", "a-values are tabulated for L2 >= L1");
  if (!infinite() && m_ < 3) throw Error("OutOfCoverage", "a-values are tabulated for m >= 3");
  std::map<DElt, int> a;
  for (const DElt& w : elements(max_len)) {
    int v = L2_;
    if (w.k == 0) v = 0;
    else if (w.k == 1) v = w.a == 1 ? L1_ : L2_;
    else if (!infinite() && w.k == m_) v = m_ * (L1_ + L2_) / 2;
    else if (!infinite() && w.k == m_ - 1 && w.a == 2) v = (m_ * L2_ - (m_ - 2) * L1_) / 2;
    a[w] = v;
  }
  return a;
}

std::map<DElt, int> Oracle::delta_table(int max_len) const {
  require_unequal("Delta table");
  if (!infinite()) throw Error("OutOfCoverage", "Delta is tabulated for m = infinity");
  std::map<DElt, int> d;
  for (const DElt& w : elements(max_len)) {
    const int k = w.k / 2;
    int v = 0;
    if (w.k == 0) v = 0;
    else if (w.k % 2 == 0) v = k * L1_ + k * L2_;
    else if (w.a == 2) v = -k * L1_ + (k + 1) * L2_;
    else if (w.k == 1) v = L1_;
    else v = (k - 1) * L1_ + k * L2_;
    d[w] = v;
  }
  return d;
}

std::vector<DElt> Oracle::dset(int max_len) const {
  require_unequal("distinguished set");
  std::vector<DElt> out;
  for (DElt d : {elt(1, 0), elt(1, 1), elt(2, 1), elt(1, 3)})
    if (d.k <= max_len) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::tuple<DElt, DElt, DElt>> Oracle::gamma_d_triples(int max_len) const {
  require_unequal("gamma triples");
  std::vector<std::tuple<DElt, DElt, DElt>> out;
  out.emplace_back(elt(1, 0), elt(1, 0), elt(1, 0));
  if (max_len >= 1) out.emplace_back(elt(1, 1), elt(1, 1), elt(1, 1));
  for (int k = 0;; ++k) {
    bool any = false;
    if (2 * k + 1 <= max_len) out.emplace_back(elt(2, 2 * k + 1), elt(2, 2 * k + 1), elt(2, 1)), any = true;
    if (2 * k + 2 <= max_len) {
      out.emplace_back(elt(1, 2 * k + 2), elt(2, 2 * k + 2), elt(1, 3));
      out.emplace_back(elt(2, 2 * k + 2), elt(1, 2 * k + 2), elt(2, 1));
      any = true;
    }
    if (2 * k + 3 <= max_len) out.emplace_back(elt(1, 2 * k + 3), elt(1, 2 * k + 3), elt(1, 3)), any = true;
    if (!any) break;
  }
  std::sort(out.begin(), out.end(), [](auto& p, auto& q) {
    return std::tie(std::get<0>(p), std::get<1>(p), std::get<2>(p)) <
           std::tie(std::get<0>(q), std::get<1>(q), std::get<2>(q));
  });
  return out;
}

JSum Oracle::j_product(const DElt& x, const DElt& y) const {
  JSum r;
  auto sum = [&](int a, int base, int k, int kp, int step) {
    for (int u = 0; u <= std::min(k, kp) * (step == 2 ? 2 : 1); ++u) r[elt(a, base - step * u)] += 1;
  };
  if (infinite() && L2_ > L1_) {
    // A: 2_{2k+1}, B: 1_{2k+3}, C: 2_{2k+2}, D: 1_{2k+2}
    auto cls = [](const DElt& w, int& k) -> char {
      if (w.k == 0) return 'I';
      if (w.a == 1 && w.k == 1) return 'S';
      if (w.a == 2 && w.k % 2) return k = (w.k - 1) / 2, 'A';
      if (w.a == 1 && w.k % 2) return k = (w.k - 3) / 2, 'B';
      if (w.a == 2) return k = (w.k - 2) / 2, 'C';
      return k = (w.k - 2) / 2, 'D';
    };
    int k = 0, kp = 0;
    char cx = cls(x, k), cy = cls(y, kp);
    const int s = 2 * k + 2 * kp;
    std::string p{cx, cy};
    if (p == "AA") sum(2, s + 1, k, kp, 4);
    else if (p == "BB") sum(1, s + 3, k, kp, 4);
    else if (p == "AC") sum(2, s + 2, k, kp, 4);
    else if (p == "BD") sum(1, s + 2, k, kp, 4);
    else if (p == "CB") sum(2, s + 2, k, kp, 4);
    else if (p == "CD") sum(2, s + 1, k, kp, 4);
    else if (p == "DA") sum(1, s + 2, k, kp, 4);
    else if (p == "DC") sum(1, s + 3, k, kp, 4);
    else if (p == "SS") r[x] = 1;
    else if (p == "II") r[x] = 1;
    return r;
  }
  if (infinite() && L1_ == L2_) {
    if (x.a == 2 && y.a == 2 && x.k % 2 && y.k % 2) {
      const int k = (x.k - 1) / 2, kp = (y.k - 1) / 2;
      sum(2, 2 * k + 2 * kp + 1, k, kp, 2);
      return r;
    }
    throw Error("OutOfCoverage", "J products with L1 = L2 are tabulated for 2_odd factors only");
  }
  if (m_ == 4 && L1_ == 1 && L2_ == 2) {
    // J_0 is M_2(Z) with matrix units E11 = 2_1, E22 = 1_3, E12 = 2_2, E21 = 1_2
    auto unit = [&](const DElt& w, int& i, int& j) {
      if (w == elt(2, 1)) return i = 1, j = 1, true;
      if (w == elt(1, 3)) return i = 2, j = 2, true;
      if (w == elt(2, 2)) return i = 1, j = 2, true;
      if (w == elt(1, 2)) return i = 2, j = 1, true;
      return false;
    };
    int i1, j1, i2, j2;
    if (unit(x, i1, j1) && unit(y, i2, j2)) {
      if (j1 == i2) {
        for (const DElt& w : {elt(2, 1), elt(1, 3), elt(2, 2), elt(1, 2)}) {
          int a, b;
          unit(w, a, b);
          if (a == i1 && b == j2) r[w] = 1;
        }
      }
      return r;
    }
    if (x == y) {
      if (x == elt(2, 3)) r[x] = -1;
      else if (x.k == 0 || x == elt(1, 1) || x.k == 4) r[x] = 1;
    }
    return r;
  }
  throw Error("OutOfCoverage", "no closed J table for these parameters");
}

std::vector<std::vector<DElt>> Oracle::left_cells(int max_len) const {
  if (L1_ > L2_) throw Error("UnsupportedWeights", "cells are tabulated for L2 >= L1");
  const int top = infinite() ? max_len : std::min(max_len, m_);
  std::vector<std::vector<DElt>> out{{elt(1, 0)}};
  // chain starting at a_1 with alternating first letters, lengths in [from, to]
  auto chain = [&](int a, int from, int to) {
    std::vector<DElt> c;
    for (int k = from; k <= std::min(to, top); ++k) c.push_back(elt((k - from) % 2 ? other(a) : a, k));
    if (!c.empty()) out.push_back(c);
  };
  const int inner = infinite() ? top : m_ - 1;
  if (L1_ == L2_) {
    chain(2, 1, inner);
    chain(1, 1, inner);
  } else {
    chain(2, 1, infinite() ? inner : m_ - 2);
    if (!infinite() && m_ - 1 <= top) out.push_back({elt(2, m_ - 1)});
    if (top >= 1) out.push_back({elt(1, 1)});
    chain(2, 2, inner);
  }
  if (!infinite() && m_ <= top) out.push_back({elt(1, m_)});
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<DElt>> Oracle::two_sided_cells(int max_len) const {
  if (L1_ > L2_) throw Error("UnsupportedWeights", "cells are tabulated for L2 >= L1");
  std::vector<DElt> singles{elt(1, 0)};
  if (!infinite()) singles.push_back(elt(1, m_));
  if (L2_ > L1_) {
    singles.push_back(elt(1, 1));
    if (!infinite()) singles.push_back(elt(2, m_ - 1));
  }
  std::vector<std::vector<DElt>> out;
  std::vector<DElt> rest;
  for (const DElt& w : elements(max_len)) {
    if (std::find(singles.begin(), singles.end(), w) != singles.end()) out.push_back({w});
    else rest.push_back(w);
  }
  if (!rest.empty()) out.push_back(rest);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wkl::dihedral_oracle
