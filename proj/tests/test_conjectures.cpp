#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wkl/conjectures.hpp"

using namespace wkl;

namespace {

std::map<std::string, Status> statuses(const std::vector<ConjectureReport>& rs) {
  std::map<std::string, Status> out;
  for (auto& r : rs) out[r.id] = r.status;
  return out;
}

ConjectureReport rep(const std::string& id, Status s) {
  ConjectureReport r;
  r.id = id;
  r.status = s;
  return r;
}

}  // namespace

TEST_CASE("split groups: everything holds") {
  for (auto W : {type_a(3), type_b(2, 1, 1), type_a(2)}) {
    auto an = Analysis::build(W);
    auto rs = check_all(*an);
    CHECK(rs.size() == 16);
    for (auto& r : rs) {
      INFO(W->describe() << " " << r.id);
      CHECK(r.status == Status::Holds);
      CHECK(r.witnesses.empty());
    }
    CHECK(meta_check(rs) == "consistent");
  }
}

TEST_CASE("unequal parameters: P1-P15 hold") {
  for (auto W : {type_b(2, 1, 2), preset("g2:2,1"), dihedral(4, 1, 2)}) {
    auto an = Analysis::build(W);
    auto rs = check_all(*an);
    for (auto& r : rs) {
      if (r.id == "Ptilde") continue;
      INFO(W->describe() << " " << r.id);
      CHECK(r.status == Status::Holds);
    }
  }
}

TEST_CASE("literal Ptilde on B2(1,2)") {
  // gamma_{1.2.1, 1.2, (1.2)^-1} != 0 and 2.1.2 <-_L 1.2, but the only x' with
  // h_{x', 1.2, 2.1.2} != 0 are 2 (h = 1) and 2.1 (h = v + v^-1): no v^2 term.
  auto an = Analysis::build(type_b(2, 1, 2));
  const Region& R = an->R();
  int x = R.id(an->W->parse("1.2.1")), y = R.id(an->W->parse("1.2")), zp = R.id(an->W->parse("2.1.2"));
  CHECK(an->ad->a[y] == 2);
  CHECK(an->ad->gamma(x, y, R.inverse(y)) != 0);
  for (int xp = 0; xp < R.size(); ++xp) CHECK(an->ht->h(xp, y, zp).coeff(2) == 0);
  ConjectureReport r = check("Ptilde", *an);
  CHECK(r.status == Status::Fails);
  REQUIRE(!r.witnesses.empty());
  CHECK(r.witnesses[0]["z'"] == "2.1.2");
}

TEST_CASE("infinite dihedral window") {
  auto an = Analysis::build(dihedral(kInf, 1, 2), 12, 3);
  auto rs = check_all(*an);
  for (auto& r : rs) {
    INFO(r.id);
    CHECK(r.status == Status::Holds);
  }
  CHECK(meta_check(rs) == "consistent");
}

TEST_CASE("P15 forms agree") {
  for (auto W : {type_a(3), type_b(2, 1, 2), dihedral(6, 1, 2)}) {
    auto an = Analysis::build(W);
    CHECK(check_p15_bivariate(*an).status == check_p15_generators(*an).status);
  }
  auto an = Analysis::build(dihedral(kInf, 2, 5), 10, 3);
  CHECK(check_p15_bivariate(*an).status == check_p15_generators(*an).status);
}

TEST_CASE("serial and parallel sweeps agree") {
  auto W = type_b(2, 1, 2);
  auto a = Analysis::build(W, -1, 0, Mode::Parallel);
  auto b = Analysis::build(W, -1, 0, Mode::Serial);
  auto ra = check_all(*a), rb = check_all(*b);
  REQUIRE(ra.size() == rb.size());
  for (size_t i = 0; i < ra.size(); ++i) CHECK(ra[i].to_json() == rb[i].to_json());
}

TEST_CASE("meta check") {
  std::vector<ConjectureReport> rs;
  for (auto& id : property_ids()) rs.push_back(rep(id, Status::Holds));
  CHECK(meta_check(rs) == "consistent");
  for (auto& r : rs)
    if (r.id == "P7") r.status = Status::Fails;
  CHECK(meta_check(rs) == "implementation-bug: P7");
  for (auto& r : rs)
    if (r.id == "P2") r.status = Status::Fails;
  CHECK(meta_check(rs) == "not-applicable");
}

TEST_CASE("only and unknown ids") {
  auto an = Analysis::build(type_a(2));
  auto rs = check_all(*an, {"P7", "P15"});
  CHECK(statuses(rs).size() == 2);
  bool thrown = false;
  try {
    check_all(*an, {"P99"});
  } catch (const Error& e) {
    thrown = e.name() == "UsageError";
  }
  CHECK(thrown);
}

TEST_CASE("quasisplit comparison for B2 inside A3") {
  auto A = type_a(3);
  Fold f = fold(A, {2, 1, 0});
  auto small = Analysis::build(f.folded), big = Analysis::build(A);
  auto rs = quasisplit_compare(f, *small, *big);
  std::set<std::string> ids;
  for (auto& r : rs) {
    INFO(r.id);
    ids.insert(r.id);
    CHECK(r.status == Status::Holds);
  }
  CHECK(ids == std::set<std::string>{"Q16c", "Q16d", "Q16e", "Q16f", "QA", "QD"});

  Fold id = fold(A, {0, 1, 2});
  auto same = Analysis::build(id.folded);
  for (auto& r : quasisplit_compare(id, *same, *big)) CHECK(r.status == Status::Holds);
}
