#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wkl/jring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

using namespace wkl;
using Rational = boost::multiprecision::cpp_rational;

namespace {

int id(const Analysis& an, int first, int k) { return an.R().id_or_throw(dihedral_elt(*an.W, first, k)); }

JZ t(int z, long c = 1) {
  JZ r;
  r.add(z, c);
  return r;
}

Rational eval(const Laurent& p, const Rational& x) {
  Rational s = 0;
  for (auto& [e, c] : p.terms()) {
    Rational m = 1;
    for (int i = 0; i < std::abs(e); ++i) m *= x;
    s += Rational(c) * (e >= 0 ? m : 1 / m);
  }
  return s;
}

int rank(std::vector<std::vector<Rational>> M) {
  int r = 0;
  const int rows = static_cast<int>(M.size()), cols = rows ? static_cast<int>(M[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && M[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    for (int i = 0; i < rows; ++i)
      if (i != r && M[i][c] != 0) {
        Rational f = M[i][c] / M[r][c];
        for (int j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
      }
    ++r;
  }
  return r;
}

}  // namespace

TEST_CASE("I2(4) with L = (1,2)") {
  auto an = Analysis::build(dihedral(4, 1, 2));
  JTable J(*an);
  auto e = [&](int f, int k) { return id(*an, f, k); };
  int x = e(2, 3);
  CHECK(J.product(x, x) == t(x, -1));
  for (int z : {e(1, 0), e(1, 1), e(2, 4)}) CHECK(J.product(z, z) == t(z));

  // matrix units E11 = t_{2_1}, E22 = t_{1_3}, E12 = t_{2_2}, E21 = t_{1_2}
  int E[2][2] = {{e(2, 1), e(2, 2)}, {e(1, 2), e(1, 3)}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          JZ expect = j == k ? t(E[i][l]) : JZ{};
          CHECK(J.product(E[i][j], E[k][l]) == expect);
        }

  auto blocks = J.decomposition();
  CHECK(blocks.size() == 5);
  JZ sum;
  for (auto& b : blocks)
    for (auto& [z, c] : b.unit.terms) sum.add(z, c);
  CHECK(sum == J.unit());
}

TEST_CASE("unit, associativity and phi on B2(1,2)") {
  auto an = Analysis::build(type_b(2, 1, 2));
  JTable J(*an);
  const int n = J.range();
  CHECK(n == 8);
  JZ one = J.unit();
  for (int x = 0; x < n; ++x) {
    CHECK(J.mul(one, t(x)) == t(x));
    CHECK(J.mul(t(x), one) == t(x));
    for (int y = 0; y < n; ++y)
      for (int u = 0; u < n; ++u) CHECK(J.mul(J.product(x, y), t(u)) == J.mul(t(x), J.product(y, u)));
  }
  // phi(1) is the unit of J_A
  JA one_a;
  for (auto& [z, c] : one.terms) one_a.add(z, Laurent(c));
  CHECK(J.phi_dagger(0) == one_a);

  // phi is multiplicative: c_x^+ c_y^+ = sum_z h_{x,y,z} c_z^+
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      JA lhs;
      for (auto& [z, h] : an->ht->h(x, y))
        for (auto& [u, c] : J.phi_dagger(z).terms) lhs.add(u, h * c);
      CHECK(lhs == J.mul(J.phi_dagger(x), J.phi_dagger(y)));
    }

  // injectivity: the matrix of phi has full rank after specializing v = 3
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n));
  for (int x = 0; x < n; ++x)
    for (auto& [z, c] : J.phi_dagger(x).terms) M[x][z] = eval(c, 3);
  CHECK(rank(M) == n);
}

TEST_CASE("phi is multiplicative on I2(4)") {
  auto an = Analysis::build(dihedral(4, 1, 2));
  JTable J(*an);
  for (int x = 0; x < J.range(); ++x)
    for (int y = 0; y < J.range(); ++y) {
      JA lhs;
      for (auto& [z, h] : an->ht->h(x, y))
        for (auto& [u, c] : J.phi_dagger(z).terms) lhs.add(u, h * c);
      CHECK(lhs == J.mul(J.phi_dagger(x), J.phi_dagger(y)));
    }
}

TEST_CASE("infinite dihedral J on a window") {
  auto an = Analysis::build(dihedral(kInf, 1, 2), 12, 3);
  JTable J(*an);
  auto e = [&](int f, int k) { return id(*an, f, k); };
  // t_{2_{2k+1}} t_{2_{2k'+1}} = sum_{u <= min(k,k')} t_{2_{2k+2k'+1-4u}}
  for (int k = 0; k <= 1; ++k)
    for (int kp = 0; kp <= 1; ++kp) {
      JZ expect;
      for (int u = 0; u <= std::min(k, kp); ++u) expect.add(e(2, 2 * k + 2 * kp + 1 - 4 * u), 1);
      CHECK(J.product(e(2, 2 * k + 1), e(2, 2 * kp + 1)) == expect);
    }
  // t_{1_{2k+2}} t_{2_{2k'+2}} = sum t_{1_{2k+2k'+3-4u}}
  for (int k = 0; k <= 0; ++k)
    for (int kp = 0; kp <= 0; ++kp) {
      JZ expect;
      for (int u = 0; u <= std::min(k, kp); ++u) expect.add(e(1, 2 * k + 2 * kp + 3 - 4 * u), 1);
      CHECK(J.product(e(1, 2 * k + 2), e(2, 2 * kp + 2)) == expect);
    }
  // J = J0 + Z t_1 + Z t_{1_1}
  auto blocks = J.decomposition();
  CHECK(blocks.size() == 3);
  CHECK(J.product(e(1, 1), e(1, 1)) == t(e(1, 1)));
  CHECK(J.product(0, 0) == t(0));
  CHECK(J.product(e(1, 1), e(2, 1)).is_zero());
  // unit law over the factors the window allows
  JZ one = J.unit();
  for (int x = 0; x < J.range(); ++x) {
    if (an->R().length(x) > 3) continue;
    CHECK(J.mul(one, t(x)) == t(x));
  }
}

TEST_CASE("json") {
  auto an = Analysis::build(dihedral(4, 1, 2));
  JTable J(*an);
  auto j = J.to_json();
  CHECK(j.is_object());
  CHECK(J.n_hat(0) == 1);
}
