#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wkl/oracle_diff.hpp"

using namespace wkl;
using namespace wkl::dihedral_oracle;

namespace {

Laurent v(int e) { return Laurent::v(e); }

TSum lin(const std::vector<std::pair<Laurent, TSum>>& parts) {
  TSum r;
  for (auto& [c, s] : parts)
    for (auto& [w, x] : s) {
      r[w] += c * x;
      if (r[w].is_zero()) r.erase(w);
    }
  return r;
}

// c_a h = T_a h + v^{-L_a} h
TSum c_gen(const Oracle& O, int a, const TSum& h) {
  return lin({{1, O.t_gen_mul(a, h)}, {v(-(a == 1 ? O.L1() : O.L2())), h}});
}

std::string err_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

}  // namespace

TEST_CASE("construction") {
  CHECK(err_name([] { Oracle(3, 1, 2); }) == "OddBondWeightMismatch");
  CHECK(err_name([] { Oracle(4, 0, 2); }) == "NonPositiveWeight");
  CHECK(err_name([] { Oracle(1, 1, 1); }) == "UsageError");
  Oracle O(4, 1, 2);
  CHECK(err_name([&] { O.elt(1, 5); }) == "OutOfCoverage");
  CHECK(O.elt(1, 4) == O.elt(2, 4));
  CHECK(O.elements(4).size() == 8);
  CHECK(Oracle(0, 1, 2).elements(3).size() == 7);
  CHECK(err_name([] { Oracle(4, 2, 1).c_closed_form(DElt{1, 1}); }) == "UnsupportedWeights");
}

TEST_CASE("Gamma and Gamma'") {
  Oracle E(5, 2, 2);
  TSum g = E.gamma(E.elt(1, 2));
  CHECK(g.size() == 4);
  CHECK(g[E.elt(1, 0)] == v(-4));
  CHECK(g[E.elt(2, 1)] == v(-2));

  for (auto [L1, L2] : {std::pair{1, 2}, std::pair{2, 5}}) {
    Oracle O(0, L1, L2);
    TSum g2 = O.gamma_prime(O.elt(2, 1));
    CHECK(g2 == TSum{{O.elt(1, 0), v(-L2)}, {O.elt(2, 1), 1}});
    int Lw = 2 * L1 + L2;
    TSum e{{O.elt(1, 3), 1}, {O.elt(1, 2), v(-L1)}, {O.elt(2, 2), v(-L1)}, {O.elt(2, 1), v(-2 * L1)}};
    for (auto y : {O.elt(1, 0), O.elt(1, 1)}) e[y] = v(-Lw + O.weight(y)) * (1 + v(2 * L1));
    CHECK(O.gamma_prime(O.elt(1, 3)) == e);

    // Gamma' through Gamma
    for (int k = 0; k <= 4; ++k) {
      std::vector<std::pair<Laurent, TSum>> parts;
      for (int s = 0; s <= k; ++s)
        parts.push_back({v(s * (L1 - L2)) * Int(s % 2 ? -1 : 1), O.gamma(O.elt(2, 2 * k - 2 * s + 1))});
      CHECK(O.gamma_prime(O.elt(2, 2 * k + 1)) == lin(parts));
      if (k >= 1)
        CHECK(O.gamma_prime(O.elt(1, 2 * k + 1)) ==
              lin({{1, O.gamma(O.elt(1, 2 * k + 1))}, {v(L1 - L2), O.gamma(O.elt(1, 2 * k - 1))}}));
    }

    // generator recursions
    Laurent zeta = v(L2 - L1) + v(L1 - L2);
    for (int kp = 0; kp < 9; ++kp) {
      CHECK(c_gen(O, 1, O.gamma_prime(O.elt(2, kp))) == O.gamma_prime(O.elt(1, kp + 1)));
      std::vector<std::pair<Laurent, TSum>> parts{{1, O.gamma_prime(O.elt(2, kp + 1))}};
      if (kp >= 2) parts.push_back({zeta, O.gamma_prime(O.elt(2, kp - 1))});
      if (kp >= 4) parts.push_back({1, O.gamma_prime(O.elt(2, kp - 3))});
      CHECK(c_gen(O, 2, O.gamma_prime(O.elt(1, kp))) == lin(parts));
    }
  }
}

TEST_CASE("products") {
  Oracle O(0, 1, 2);
  Laurent f1 = v(1) + v(-1), f2 = v(2) + v(-2);
  CHECK(O.product(O.elt(2, 3), O.elt(2, 3)) == CSum{{O.elt(2, 1), f2}, {O.elt(2, 5), f2}});
  for (int k = 1; k < 8; ++k) CHECK(O.product(O.elt(1, 1), O.elt(1, k)) == CSum{{O.elt(1, k), f1}});
  CHECK(O.product(O.elt(2, 1), O.elt(2, 1)) == CSum{{O.elt(2, 1), f2}});
  CHECK(O.product(O.elt(2, 1), O.elt(1, 4)) ==
        CSum{{O.elt(2, 5), 1}, {O.elt(2, 3), v(1) + v(-1)}, {O.elt(2, 1), 1}});

  Oracle F(4, 1, 2);
  CHECK(F.p0() == -(v(2) + v(-2)) * (v(1) + v(-1)));
  CHECK(err_name([] { Oracle(0, 1, 2).p0(); }) == "OutOfCoverage");
}

TEST_CASE("D_{s1} series") {
  for (auto [L1, L2] : {std::pair{1, 2}, std::pair{2, 5}}) {
    Oracle O(0, L1, L2);
    TSum d = O.d_s1(10);
    CHECK(d[O.elt(1, 1)] == Laurent(1));
    CHECK(d[O.elt(2, 2)] == -v(-L2));
  }
}

TEST_CASE("T-table matches Hecke multiplication") {
  for (auto [L1, L2] : {std::pair{1, 2}, std::pair{1, 1}}) {
    Oracle O(0, L1, L2);
    auto W = dihedral(kInf, L1, L2);
    for (auto& x : O.elements(4))
      for (auto& y : O.elements(4)) {
        auto elt = [&](const DElt& d) { return d.k == 0 ? W->identity() : dihedral_elt(*W, d.a, d.k); };
        HeckeElt h = t_mul(*W, HeckeElt::basis_elt(elt(x)), HeckeElt::basis_elt(elt(y)));
        TSum o = O.t_product(x, y);
        CHECK(o.size() == h.terms.size());
        for (auto& [w, c] : o) CHECK(h.coeff(elt(w)) == c);
      }
  }
}

TEST_CASE("tables") {
  Oracle O(0, 1, 2);
  auto a = O.a_table(6);
  CHECK(a[O.elt(1, 0)] == 0);
  CHECK(a[O.elt(1, 1)] == 1);
  CHECK(a[O.elt(2, 5)] == 2);
  auto d = O.dset(8);
  CHECK(d == std::vector<DElt>{O.elt(1, 0), O.elt(1, 1), O.elt(2, 1), O.elt(1, 3)});
  CHECK(O.two_sided_cells(5).size() == 3);
  // J: t_{2_3}^2 = -t_{2_3} for m = 4
  Oracle F(4, 1, 2);
  CHECK(F.j_product(F.elt(2, 3), F.elt(2, 3)) == JSum{{F.elt(2, 3), -1}});
  CHECK(O.j_product(O.elt(2, 3), O.elt(2, 3)) == JSum{{O.elt(2, 1), 1}, {O.elt(2, 5), 1}});
}

TEST_CASE("oracle-diff finds no discrepancies") {
  struct Case {
    int m, L1, L2;
  };
  for (auto c : {Case{3, 1, 1}, Case{4, 1, 1}, Case{5, 1, 1}, Case{6, 1, 1}, Case{4, 1, 2}, Case{6, 1, 2},
                 Case{8, 1, 2}, Case{4, 2, 5}, Case{6, 2, 5}, Case{8, 2, 5}, Case{0, 1, 2}, Case{0, 2, 5},
                 Case{0, 1, 1}}) {
    OracleDiffReport r = oracle_diff(c.m, c.L1, c.L2, 12, 3);
    INFO(r.system);
    CHECK(r.checks > 0);
    CHECK(r.diffs.empty());
  }
  OracleDiffReport r = oracle_diff(0, 1, 2, 12, 3);
  for (auto k : {"c-basis", "product", "T-table", "D_s1", "a", "Delta", "D", "gamma-D", "J", "left cells",
                 "two-sided cells"})
    CHECK(r.per_check.count(k) == 1);
  CHECK(oracle_diff(4, 1, 2).per_check.count("p0") == 1);
}
