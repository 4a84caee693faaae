#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wkl/afun.hpp"
#include "wkl/symbols.hpp"

#include <set>

using namespace wkl;
using namespace wkl::symbols;

namespace {

std::string err_name(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.name();
  }
  return "";
}

long fact(int n) { return n <= 1 ? 1 : n * fact(n - 1); }

const std::vector<std::pair<int, int>> kParams{{1, 1}, {1, 2}, {2, 3}, {1, 0}, {2, 1}, {3, 5}};

}  // namespace

TEST_CASE("ranks and shift") {
  for (auto [a, b] : kParams)
    for (int N = 0; N < 4; ++N) {
      CHECK(rank(staircase(a, b, N)) == 0);
      for (int n = 0; n <= 3; ++n)
        for (auto& m : enumerate_multisets(a, b, n, N)) {
          CHECK(m.valid());
          CHECK(rank(m) == n);
          CHECK(rank(shift(m)) == n);
        }
    }
  CHECK(err_name([] { Params::make(0, 1); }) == "UsageError");
}

TEST_CASE("enumeration stabilizes") {
  for (auto [a, b] : kParams)
    for (int n = 1; n <= 3; ++n) {
      size_t prev = 0;
      bool stable = false;
      for (int N = 1; N <= 8 && !stable; ++N) {
        size_t c = enumerate_multisets(a, b, n, N).size();
        stable = c == prev;
        prev = c;
      }
      CHECK(stable);
    }
}

TEST_CASE("bipartitions and symbols") {
  for (auto [a, b] : kParams) {
    Params p = Params::make(a, b);
    for (int n = 0; n <= 4; ++n)
      for (auto& ab : bipartitions(n)) {
        Symbol s = bipartition_to_symbol(ab, a, b);
        CHECK(s.valid());
        CHECK(rank(s) == n);
        CHECK(symbol_to_bipartition(s) == ab);
        Symbol big = bipartition_to_symbol(ab, a, b, s.N() + 3);
        CHECK(symbol_to_bipartition(big) == ab);
        for (int i = 0; i < p.r; ++i) CHECK(big.top[i] == a * i + p.bp);
        CHECK(symbol_to_bipartition(shift(s)) == ab);
        CHECK(Symbol::parse(s.str(), a, b) == s);
      }
    // ((n), empty): the last top entry carries the row, the rest is the staircase
    for (int n = 1; n <= 3; ++n) {
      Bipartition ab{{n}, {}};
      int N = min_n(ab, a, b) + 1;
      Symbol s = bipartition_to_symbol(ab, a, b, N);
      int last = N + p.r;
      CHECK(s.top.back() == a * (n + last - 1) + p.bp);
      for (int i = 1; i < last; ++i) CHECK(s.top[i - 1] == a * (i - 1) + p.bp);
    }
  }
  CHECK(err_name([] { bipartition_to_symbol({{}, {1}}, 1, 1, 0); }) == "RankMismatch");
  CHECK(err_name([] { Symbol::parse("0,1", 1, 1); }) == "ParseError");
}

TEST_CASE("complement") {
  for (auto [a, b] : kParams)
    for (int n = 1; n <= 3; ++n)
      for (auto& ab : bipartitions(n)) {
        Symbol s = bipartition_to_symbol(ab, a, b);
        int t = 0;
        while (err_name([&] { complement_symbol(s, t); }) == "TTooSmall") ++t;
        Symbol c = complement_symbol(s, t);
        CHECK(rank(c) == n);
        CHECK(complement_symbol(c, t) == s);
        Multiset m = s.multiset();
        CHECK(rank(complement(m, t + 1)) == n);
        CHECK(complement(complement(m, t + 1), t + 1).entries == m.entries);
      }
}

TEST_CASE("a-values") {
  for (auto [a, b] : kParams)
    for (int n = 1; n <= 4; ++n) {
      CHECK(a_symbol(bipartition_to_symbol({{n}, {}}, a, b)) == 0);
      Bipartition sign{{}, Partition(n, 1)};
      CHECK(a_symbol(bipartition_to_symbol(sign, a, b)) == a * n * (n - 1) + b * n);
      for (auto& ab : bipartitions(n)) {
        Symbol s = bipartition_to_symbol(ab, a, b);
        CHECK(a_symbol(s) == a_symbol(shift(s)));
        CHECK(a_symbol(s) == a_symbol(bipartition_to_symbol(ab, a, b, s.N() + 2)));
      }
    }
  std::set<long> vals;
  for (auto& ab : bipartitions(2)) vals.insert(a_symbol(bipartition_to_symbol(ab, 1, 2)));
  CHECK(vals == std::set<long>{0, 1, 2, 3, 6});
}

TEST_CASE("symbol a-values equal the Hecke a-values of B2(1,2)") {
  std::set<long> sym;
  for (auto& ab : bipartitions(2)) sym.insert(a_symbol(bipartition_to_symbol(ab, 1, 2)));
  auto an = Analysis::build(type_b(2, 1, 2));
  std::set<long> hecke(an->ad->a.begin(), an->ad->a.end());
  CHECK(sym == hecke);
}

TEST_CASE("Hoefsmit generic degrees") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}})
    for (int n = 1; n <= 4; ++n) {
      long order = (1L << n) * fact(n);
      Int sum_dim2 = 0;
      for (auto& ab : bipartitions(n)) {
        Laurent f = hoefsmit_f(ab, a, b);
        Symbol s = bipartition_to_symbol(ab, a, b);
        INFO(bipartition_str(ab) << " a=" << a << " b=" << b);
        CHECK(f.min_exp() == -2 * a_symbol(s));
        CHECK(f.coeff(f.min_exp()) == f_symbol(s));
        Int at1 = f.at_one();
        REQUIRE(order % static_cast<long>(at1) == 0);
        Int dim = order / at1;
        sum_dim2 += dim * dim;
      }
      CHECK(sum_dim2 == order);
      Laurent triv = hoefsmit_f({{n}, {}}, a, b);
      CHECK(triv.min_exp() == 0);
      CHECK(triv.coeff(0) == 1);
    }
}

TEST_CASE("involutions and families") {
  auto two = admissible_involutions(2, 0);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == std::vector<int>{1, 0});
  CHECK(s_iota(two[0]).size() == 2);
  for (int M = 1; M <= 5; ++M) {
    auto id = admissible_involutions(M, M);
    REQUIRE(id.size() == 1);
    CHECK(s_iota(id[0]) == std::vector<std::vector<int>>{{}});
  }
  CHECK(err_name([] { admissible_involutions(3, 0); }) == "ParityMismatch");
  for (int M = 0; M <= 6; ++M)
    for (int r = M % 2; r <= M; r += 2) {
      for (auto& inv : admissible_involutions(M, r)) CHECK(s_iota(inv).size() == (1u << (M - r) / 2));
      CHECK(involution_graph_connected(M, r));
    }
  // a is constant on families, families partition the bipartitions
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 4}})
    for (int n = 1; n <= 4; ++n) {
      std::set<Bipartition> seen;
      for (auto& fam : families(a, b, n)) {
        long av = a_symbol(fam[0]);
        for (auto& s : fam) {
          CHECK(a_symbol(s) == av);
          CHECK(seen.insert(symbol_to_bipartition(s)).second);
        }
      }
      CHECK(seen.size() == bipartitions(n).size());
    }
  CHECK(err_name([] { families(2, 1, 2); }) == "UsageError");
}

TEST_CASE("type A a-values") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(a_partition({n}, 1) == 0);
    CHECK(a_partition(Partition(n, 1), 2) == 2 * n * (n - 1) / 2);
  }
  for (int n : {3, 4}) {
    std::set<long> sym;
    for (auto& p : partitions(n)) sym.insert(a_partition(p, 1));
    auto an = Analysis::build(type_a(n - 1));
    std::set<long> hecke(an->ad->a.begin(), an->ad->a.end());
    CHECK(sym == hecke);
  }
  CHECK(dual({3, 1}) == Partition{2, 1, 1});
  CHECK(bipartition_str({{2, 1}, {1}}) == "(2,1);(1)");
}
