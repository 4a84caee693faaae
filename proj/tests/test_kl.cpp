#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wkl/kl.hpp"

#include <filesystem>

using namespace wkl;

namespace {

Laurent v(int e) { return Laurent::v(e); }

struct Fixture {
  SystemPtr W;
  RegionPtr R;
  std::unique_ptr<KLTable> kl;
  Fixture(SystemPtr w, int radius = -1, Mode mode = Mode::Parallel, std::string cache = "")
      : W(std::move(w)), R(std::make_shared<Region>(W, radius)), kl(std::make_unique<KLTable>(R, mode, cache)) {}
  int id(int first, int k) const { return R->id_or_throw(dihedral_elt(*W, first, k)); }
  int id(const std::string& s) const { return R->id_or_throw(W->parse(s)); }
};

}  // namespace

TEST_CASE("p_{w,w} = 1 and triangularity") {
  for (auto W : {type_a(3), type_b(3, 1, 2), dihedral(kInf, 1, 2)}) {
    Fixture f(W, W->finite() ? -1 : 8);
    for (int w = 0; w < f.R->size(); ++w) {
      CHECK(f.kl->p(w, w) == Laurent(1));
      for (int y = 0; y < f.R->size(); ++y) {
        const Laurent& p = f.kl->p(y, w);
        if (y != w) CHECK(p.in_negative_part());
        if (!f.R->leq(y, w)) CHECK(p.is_zero());
      }
    }
  }
}

TEST_CASE("equal-parameter dihedral closed form") {
  for (int m : {3, 4, 5, 6})
    for (int L : {1, 2}) {
      Fixture f(dihedral(m, L, L));
      for (int w = 0; w < f.R->size(); ++w)
        for (int y = 0; y < f.R->size(); ++y) {
          Laurent e = f.R->leq(y, w) ? v(f.R->weight(y) - f.R->weight(w)) : Laurent();
          CHECK(f.kl->p(y, w) == e);
        }
    }
}

TEST_CASE("unequal infinite dihedral example") {
  for (auto [L1, L2] : {std::pair{1, 2}, std::pair{2, 5}}) {
    Fixture f(dihedral(kInf, L1, L2), 6);
    CHECK(f.kl->p(f.id(1, 1), f.id(1, 3)) == v(-L1 - L2) + v(L1 - L2));
  }
}

TEST_CASE("c_s, c_1 and c_{w0}") {
  auto W = type_b(3, 1, 2);
  Fixture f(W);
  for (int s = 0; s < 3; ++s) {
    HeckeElt c = f.kl->c(W->gen(s));
    HeckeElt e = HeckeElt::basis_elt(W->gen(s));
    e.add(W->identity(), v(-W->gen_weight(s)));
    CHECK(c == e);
  }
  CHECK(f.kl->c(W->identity()) == HeckeElt::basis_elt(W->identity()));
  int w0 = f.R->longest();
  for (int y = 0; y < f.R->size(); ++y) {
    int yw0 = f.R->id(W->mul(f.R->elt(y), f.R->elt(w0)));
    CHECK(f.kl->p(y, w0) == v(-f.R->weight(yw0)));
  }
}

TEST_CASE("bar invariance and the c_s c_w recursion") {
  auto W = dihedral(6, 1, 2);
  Fixture f(W);
  RTable rt(f.R);
  for (int w = 0; w < f.R->size(); ++w) {
    CHECK(bar_vec(rt, f.kl->col(w)) == f.kl->col(w));
    for (int x = 0; x < f.R->size(); ++x) {
      if (x == w || !f.R->leq(x, w)) continue;
      Laurent s;
      for (int y : f.R->below(w))
        if (f.R->leq(x, y)) s.add_mul(rt.r(x, y), f.kl->p(y, w));
      CHECK(f.kl->p(x, w).bar() == s);
    }
  }
}

TEST_CASE("independent oracle via r-polynomials") {
  for (auto W : {dihedral(6, 1, 2), type_a(3), type_b(3, 2, 1)}) {
    Fixture f(W);
    RTable rt(f.R);
    for (int w = 0; w < f.R->size(); ++w) CHECK(p_column_via_r(rt, w) == f.kl->col(w));
    CHECK(p_via_r(rt, 3, 3) == Laurent(1));
    for (int s = 0; s < W->rank(); ++s)
      CHECK(p_via_r(rt, 0, f.R->id(W->gen(s))) == v(-W->gen_weight(s)));
  }
}

TEST_CASE("mu") {
  // split: mu = coefficient of v^-1 in p
  auto A = type_a(3);
  Fixture fa(A);
  for (int w = 0; w < fa.R->size(); ++w)
    for (int y = 0; y < w; ++y)
      for (int s = 0; s < 3; ++s) {
        if (!fa.R->ldesc(y, s) || fa.R->ldesc(w, s) || !fa.R->leq(y, w)) continue;
        CHECK(fa.kl->mu(s, y, w) == Laurent(static_cast<long>(fa.kl->p(y, w).coeff(-1))));
      }
  Fixture fi(dihedral(kInf, 1, 2), 8);
  CHECK(fi.kl->mu(1, fi.id(2, 1), fi.id(1, 2)) == v(1) + v(-1));
  // degree window and parity
  for (auto W : {dihedral(kInf, 2, 5), type_b(3, 1, 3)}) {
    Fixture f(W, W->finite() ? -1 : 7);
    for (int w = 0; w < f.R->size(); ++w)
      for (int y = 0; y < w; ++y)
        for (int s = 0; s < W->rank(); ++s) {
          if (!f.R->ldesc(y, s) || f.R->ldesc(w, s) || !f.R->leq(y, w)) continue;
          Laurent m = f.kl->mu(s, y, w);
          CHECK(m.bar() == m);
          if (m.is_zero()) continue;
          int Ls = W->gen_weight(s);
          CHECK(m.min_exp() >= -Ls + 1);
          CHECK(m.max_exp() <= Ls - 1);
          for (auto& [e, c] : m.terms())
            CHECK(((e - f.R->weight(w) + f.R->weight(y) + Ls) % 2 + 2) % 2 == 0);
        }
  }
}

TEST_CASE("c_s c_w") {
  Fixture f(dihedral(kInf, 1, 2), 8);
  Laurent zeta = v(1) + v(-1);
  CVec r = f.kl->cs_mul_c(1, f.id(1, 4), Side::Left);
  CVec e{{f.id(2, 1), 1}, {f.id(2, 3), zeta}, {f.id(2, 5), 1}};
  CHECK(r == e);
  CHECK(f.kl->cs_mul_c(0, 0, Side::Left) == CVec{{f.id(1, 1), 1}});
  int w = f.id(1, 3);
  CHECK(f.kl->cs_mul_c(0, w, Side::Left) == CVec{{w, v(1) + v(-1)}});
  // against T-basis multiplication, both sides
  for (auto W : {type_b(3, 2, 1), dihedral(5, 1, 1)}) {
    Fixture g(W);
    for (int w2 = 0; w2 < g.R->size(); ++w2)
      for (int s = 0; s < W->rank(); ++s)
        for (Side side : {Side::Left, Side::Right}) {
          TVec out;
          apply_c(*g.R, s, side, g.kl->col(w2), out);
          CHECK(g.kl->to_c_basis(out) == g.kl->cs_mul_c(s, w2, side));
        }
  }
}

TEST_CASE("h examples") {
  Fixture f(dihedral(kInf, 1, 2), 8);
  HTable ht(*f.kl, 4);
  for (int y = 0; y < ht.domain_size(); ++y) CHECK(ht.h(0, y) == CVec{{y, 1}});
  CHECK(ht.h(f.id(2, 1), f.id(2, 1)) == CVec{{f.id(2, 1), v(2) + v(-2)}});

  Fixture g(dihedral(4, 1, 2));
  HTable h4(*g.kl, g.R->radius());
  int x = g.id(2, 3);
  Laurent p0 = -(v(2) + v(-2)) * (v(1) + v(-1));
  CHECK(h4.h(x, x, x) == p0);
  for (auto& [z, c] : h4.h(x, x)) CHECK((z == x || z == g.id(2, 4)));
}

TEST_CASE("h agrees with T-basis products and serial reference") {
  auto W = type_b(3, 1, 2);
  Fixture par(W), ser(W, -1, Mode::Serial);
  HTable hp(*par.kl, par.R->radius()), hs(*ser.kl, ser.R->radius(), Mode::Serial);
  for (int w = 0; w < par.R->size(); ++w) CHECK(par.kl->col(w) == ser.kl->col(w));
  for (int x = 0; x < hp.domain_size(); x += 3)
    for (int y = 0; y < hp.domain_size(); ++y) {
      CHECK(hp.h(x, y) == hs.h(x, y));
      HeckeElt prod = t_mul(*W, par.kl->c(par.R->elt(x)), par.kl->c(par.R->elt(y)));
      CHECK(par.kl->to_c_basis(to_vec(*par.R, prod)) == hp.h(x, y));
    }
}

TEST_CASE("q' and duality") {
  for (auto W : {type_a(3), type_b(2, 1, 2), dihedral(6, 1, 2)}) {
    Fixture f(W);
    int n = f.R->size(), w0 = f.R->longest();
    for (int x = 0; x < n; ++x) {
      CHECK(f.kl->qprime(x, x) == Laurent(1));
      for (int w = 0; w < n; ++w) {
        Laurent s;
        for (int z = 0; z < n; ++z) s.add_mul(f.kl->qprime(x, z), f.kl->p(z, w));
        CHECK(s == Laurent(x == w ? 1 : 0));
        int ww0 = f.R->id(W->mul(f.R->elt(w), f.R->elt(w0)));
        int xw0 = f.R->id(W->mul(f.R->elt(x), f.R->elt(w0)));
        CHECK(f.kl->q(x, w) == f.kl->p(ww0, xw0));
      }
    }
  }
}

TEST_CASE("D functional") {
  auto W = dihedral(4, 1, 2);
  Fixture f(W);
  int n = f.R->size();
  for (int z = 0; z < n; ++z)
    for (int w = 0; w < n; ++w) CHECK(f.kl->d_functional(z, f.kl->col(w)) == Laurent(z == w ? 1 : 0));
  for (int y = 0; y < n; ++y) {
    TVec e(n);
    e[y] = 1;
    CHECK(f.kl->d_functional(0, e) == v(-f.R->weight(y)) * Int(W->sign(f.R->elt(y))));
    for (int z = 0; z < n; ++z)
      if (!f.R->leq(z, y)) CHECK(f.kl->d_functional(z, e).is_zero());
  }
}

TEST_CASE("column cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "wkl_test_cache";
  std::filesystem::remove_all(dir);
  auto W = type_b(3, 1, 2);
  Fixture a(W, -1, Mode::Parallel, dir.string());
  Fixture b(W, -1, Mode::Parallel, dir.string());
  for (int w = 0; w < a.R->size(); ++w) CHECK(a.kl->col(w) == b.kl->col(w));
  std::filesystem::remove_all(dir);
}

TEST_CASE("RegionTooSmall when a product leaves the window") {
  Fixture f(dihedral(kInf, 1, 2), 4);
  bool thrown = false;
  try {
    HTable ht(*f.kl, 3);
  } catch (const Error& e) {
    thrown = e.name() == "RegionTooSmall";
  }
  CHECK(thrown);
}
