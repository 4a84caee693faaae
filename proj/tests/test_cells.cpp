#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wkl/cells.hpp"

#include <set>

using namespace wkl;

namespace {

using Blocks = std::set<std::set<std::string>>;

struct Fixture {
  SystemPtr W;
  RegionPtr R;
  std::unique_ptr<KLTable> kl;
  Fixture(SystemPtr w, int radius = -1, Mode mode = Mode::Parallel)
      : W(std::move(w)), R(std::make_shared<Region>(W, radius)), kl(std::make_unique<KLTable>(R, mode)) {}
  std::string d(int first, int k) const { return dihedral_elt(*W, first, k).str(); }
  int id(int first, int k) const { return R->id_or_throw(dihedral_elt(*W, first, k)); }
};

Blocks blocks(const Cells& c) {
  Blocks out;
  for (auto& b : c.partition().blocks) {
    std::set<std::string> s;
    for (int w : b) s.insert(c.region().elt(w).str());
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("equal-parameter even dihedral left cells") {
  for (int m : {4, 6}) {
    Fixture f(dihedral(m, 1, 1));
    Cells left(*f.kl, CellKind::Left);
    std::set<std::string> a, b;
    for (int k = 1; k < m; ++k) {
      a.insert(f.d(k % 2 ? 2 : 1, k));
      b.insert(f.d(k % 2 ? 1 : 2, k));
    }
    Blocks e{{f.d(1, 0)}, a, b, {f.d(1, m)}};
    CHECK(blocks(left) == e);
  }
}

TEST_CASE("I2(4) with L2 > L1") {
  Fixture f(dihedral(4, 1, 2));
  Cells left(*f.kl, CellKind::Left);
  Blocks e{{f.d(1, 0)}, {f.d(2, 1), f.d(1, 2)}, {f.d(2, 3)}, {f.d(1, 1)}, {f.d(2, 2), f.d(1, 3)}, {f.d(2, 4)}};
  CHECK(blocks(left) == e);
}

TEST_CASE("I2(inf) cells on a window") {
  Fixture f(dihedral(kInf, 1, 2), 16);
  Cells two(*f.kl, CellKind::TwoSided, 3);
  CHECK(two.trusted_radius() == 13);
  auto p = two.partition();
  CHECK(p.heuristic);
  REQUIRE(p.blocks.size() == 3);
  CHECK(blocks(two).count({f.d(1, 0)}) == 1);
  CHECK(blocks(two).count({f.d(1, 1)}) == 1);
  CHECK(p.blocks[2].size() == static_cast<size_t>(2 * 13 - 1));

  // edge structure: 2_1 <- 1_4, 2_2 <- 1_5
  Cells left(*f.kl, CellKind::Left, 3);
  auto& adj = left.edges();
  auto has = [&](int from, int to) {
    return std::find(adj[from].begin(), adj[from].end(), to) != adj[from].end();
  };
  CHECK(has(f.id(1, 4), f.id(2, 1)));
  CHECK(has(f.id(1, 5), f.id(2, 2)));
  Fixture g(dihedral(kInf, 1, 1), 10);
  Cells lg(*g.kl, CellKind::Left, 3);
  auto& ag = lg.edges();
  auto hasg = [&](int from, int to) { return std::find(ag[from].begin(), ag[from].end(), to) != ag[from].end(); };
  CHECK(hasg(g.id(1, 0), g.id(2, 1)));
  for (int k = 1; k < 6; ++k) {
    int a = g.id(k % 2 ? 2 : 1, k), b = g.id(k % 2 ? 1 : 2, k + 1);
    CHECK(hasg(a, b));
    CHECK(hasg(b, a));
  }
  CHECK(!hasg(g.id(1, 4), g.id(2, 1)));
}

TEST_CASE("preorder properties") {
  for (auto W : {type_a(3), dihedral(4, 1, 2), dihedral(6, 1, 2), type_b(3, 1, 2)}) {
    Fixture f(W);
    Cells L(*f.kl, CellKind::Left), R(*f.kl, CellKind::Right), LR(*f.kl, CellKind::TwoSided);
    int n = f.R->size(), w0 = f.R->longest();
    for (int w = 0; w < n; ++w) {
      CHECK(LR.leq(w, w));
      CHECK(L.leq(w0, w));
      for (int wp = 0; wp < n; ++wp) {
        int wi = f.R->inverse(w), wpi = f.R->inverse(wp);
        CHECK(L.leq(w, wp) == R.leq(wi, wpi));
        if (L.leq(w, wp)) CHECK((f.R->descents(wp, Side::Right) & ~f.R->descents(w, Side::Right)) == 0u);
        if (L.equiv(w, wp)) CHECK(f.R->descents(wp, Side::Right) == f.R->descents(w, Side::Right));
        int ww0 = f.R->id(W->mul(f.R->elt(w), f.R->elt(w0)));
        int wpw0 = f.R->id(W->mul(f.R->elt(wp), f.R->elt(w0)));
        CHECK(L.leq(w, wp) == L.leq(wpw0, ww0));
        if (L.leq(w, wp) || R.leq(w, wp)) CHECK(LR.leq(w, wp));
      }
      for (int wp : L.upper_set(w)) CHECK(L.leq(w, wp));
    }
  }
}

TEST_CASE("serial and parallel edges agree") {
  Fixture f(type_b(3, 2, 1));
  for (Side s : {Side::Left, Side::Right}) CHECK(cell_edges(*f.kl, s, Mode::Serial) == cell_edges(*f.kl, s, Mode::Parallel));
}

TEST_CASE("margin larger than the window") {
  Fixture f(dihedral(kInf, 1, 2), 4);
  bool thrown = false;
  try {
    Cells c(*f.kl, CellKind::Left, 5);
  } catch (const Error& e) {
    thrown = e.name() == "RegionTooSmall";
  }
  CHECK(thrown);
}

TEST_CASE("partition json") {
  Fixture f(dihedral(4, 1, 2));
  Cells L(*f.kl, CellKind::Left);
  auto j = L.partition().to_json(*f.R);
  CHECK(j.dump().find("blocks") != std::string::npos);
  CHECK(parse_kind(kind_name(CellKind::TwoSided)) == CellKind::TwoSided);
}
