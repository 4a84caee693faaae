#include "wkl/conjectures.hpp"

#include <exception>
#include <optional>
#include <set>

namespace wkl {

using json = nlohmann::json;

std::string status_name(Status s) {
  switch (s) {
    case Status::Holds:
      return "holds";
    case Status::Fails:
      return "fails";
    default:
      return "not-applicable";
  }
}

json ConjectureReport::to_json() const {
  json j{{"property", id}, {"status", status_name(status)}, {"region", region}};
  j["witnesses"] = witnesses;
  if (!note.empty()) j["note"] = note;
  return j;
}

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = {"P1", "P2",  "P3",  "P4",  "P5",  "P6",
                                               "P7", "P8",  "P9",  "P10", "P11", "P12",
                                               "P13", "P14", "P15", "Ptilde"};
  return ids;
}

namespace {

// Runs f(i) for i in [0,n) and returns the result for the least i that produced one.
template <class F>
std::optional<json> sweep(int n, Mode mode, F&& f) {
  std::vector<std::optional<json>> res(n);
  if (mode == Mode::Serial) {
    for (int i = 0; i < n; ++i)
      if ((res[i] = f(i))) return res[i];
    return std::nullopt;
  }
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      res[i] = f(i);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  for (auto& r : res)
    if (r) return r;
  return std::nullopt;
}

struct Ctx {
  const Analysis& A;
  const Region& R;
  const AData& ad;
  int T, nd;
  Mode mode;
  std::vector<int> dT;    // distinguished elements in the quantifier window
  std::vector<int> dExt;  // distinguished elements among certified domain elements
  std::vector<char> inD;

  explicit Ctx(const Analysis& an)
      : A(an), R(an.R()), ad(*an.ad), T(an.ad->trusted), nd(an.ad->nd), mode(an.mode) {
    if (!ad.all_certified())
      throw Error("UncertifiedRegion", "some a-values in the window are not certified");
    dT = ad.dset();
    inD.assign(R.size(), 0);
    for (int z = 0; z < nd; ++z)
      if (ad.certified[z] && ad.a[z] == ad.delta[z]) {
        dExt.push_back(z);
        inD[z] = 1;
      }
  }
  std::string e(int i) const { return R.elt(i).str(); }
  int a(int z) const {
    if (!ad.certified[z]) throw Error("UncertifiedRegion", "a(" + e(z) + ") is not certified");
    return ad.a[z];
  }
  long g(int x, int y, int z) const { return ad.gamma(x, y, z); }
  int inv(int z) const { return R.inverse(z); }
};

ConjectureReport make(const std::string& id, const Ctx& c, const std::optional<json>& w) {
  ConjectureReport r;
  r.id = id;
  r.region = c.A.describe();
  if (w) {
    r.status = Status::Fails;
    r.witnesses.push_back(*w);
  }
  return r;
}

ConjectureReport p1(const Ctx& c) {
  auto w = sweep(c.T, c.mode, [&](int z) -> std::optional<json> {
    if (c.a(z) > c.ad.delta[z]) return json{{"z", c.e(z)}, {"a", c.a(z)}, {"Delta", c.ad.delta[z]}};
    return std::nullopt;
  });
  return make("P1", c, w);
}

ConjectureReport p2(const Ctx& c) {
  std::optional<json> w;
  for (auto& [k, g] : c.ad.gamma_table) {
    auto [x, y, d] = k;
    if (x >= c.T || y >= c.T || d >= c.T || !c.inD[d]) continue;
    if (x != c.inv(y)) {
      w = json{{"x", c.e(x)}, {"y", c.e(y)}, {"d", c.e(d)}, {"gamma", g}};
      break;
    }
  }
  return make("P2", c, w);
}

ConjectureReport p3(const Ctx& c) {
  auto w = sweep(c.T, c.mode, [&](int y) -> std::optional<json> {
    std::vector<std::string> ds;
    for (int d : c.dExt)
      if (c.g(c.inv(y), y, d) != 0) ds.push_back(c.e(d));
    if (ds.size() != 1) return json{{"y", c.e(y)}, {"d_with_nonzero_gamma", ds}};
    return std::nullopt;
  });
  return make("P3", c, w);
}

ConjectureReport p4(const Ctx& c) {
  auto w = sweep(c.T, c.mode, [&](int zp) -> std::optional<json> {
    for (int z = 0; z < c.T; ++z)
      if (c.A.two->leq(zp, z) && c.a(zp) < c.a(z))
        return json{{"z'", c.e(zp)}, {"z", c.e(z)}, {"a(z')", c.a(zp)}, {"a(z)", c.a(z)}};
    return std::nullopt;
  });
  return make("P4", c, w);
}

ConjectureReport p5(const Ctx& c) {
  std::optional<json> w;
  for (int d : c.dT) {
    for (int y = 0; y < c.T && !w; ++y) {
      long g = c.g(c.inv(y), y, d);
      if (g != 0 && (g != c.ad.n[d] || (g != 1 && g != -1)))
        w = json{{"d", c.e(d)}, {"y", c.e(y)}, {"gamma", g}, {"n_d", c.ad.n[d]}};
    }
    if (w) break;
  }
  return make("P5", c, w);
}

ConjectureReport p6(const Ctx& c) {
  std::optional<json> w;
  for (int d : c.dT)
    if (c.inv(d) != d) {
      w = json{{"d", c.e(d)}};
      break;
    }
  return make("P6", c, w);
}

ConjectureReport p7(const Ctx& c) {
  auto w = sweep(c.T, c.mode, [&](int x) -> std::optional<json> {
    for (int y = 0; y < c.T; ++y)
      for (int z = 0; z < c.T; ++z) {
        long a = c.g(x, y, z), b = c.g(y, z, x);
        if (a != b)
          return json{{"x", c.e(x)}, {"y", c.e(y)}, {"z", c.e(z)}, {"gamma_xyz", a}, {"gamma_yzx", b}};
      }
    return std::nullopt;
  });
  return make("P7", c, w);
}

ConjectureReport p8(const Ctx& c) {
  std::optional<json> w;
  const Cells& L = *c.A.left;
  for (auto& [k, g] : c.ad.gamma_table) {
    auto [x, y, z] = k;
    if (x >= c.T || y >= c.T || z >= c.T) continue;
    if (!L.equiv(x, c.inv(y)) || !L.equiv(y, c.inv(z)) || !L.equiv(z, c.inv(x))) {
      w = json{{"x", c.e(x)}, {"y", c.e(y)}, {"z", c.e(z)}, {"gamma", g}};
      break;
    }
  }
  return make("P8", c, w);
}

ConjectureReport p9_11(const Ctx& c, const std::string& id, const Cells& cells) {
  auto w = sweep(c.T, c.mode, [&](int zp) -> std::optional<json> {
    for (int z = 0; z < c.T; ++z)
      if (cells.leq(zp, z) && c.a(zp) == c.a(z) && !cells.equiv(zp, z))
        return json{{"z'", c.e(zp)}, {"z", c.e(z)}, {"a", c.a(z)}};
    return std::nullopt;
  });
  return make(id, c, w);
}

ConjectureReport p12(const Ctx& c) {
  const CoxeterSystem& W = c.R.system();
  std::optional<json> w;
  std::string note;
  for (GenSet I = 0; I < W.all_gens() && !w; ++I) {
    std::vector<int> gens;
    std::vector<int> pos(W.rank(), -1);
    for (int s = 0; s < W.rank(); ++s)
      if (I >> s & 1) {
        pos[s] = static_cast<int>(gens.size());
        gens.push_back(s);
      }
    std::vector<int> members;
    for (int y = 0; y < c.T; ++y) {
      bool in = true;
      for (uint8_t s : c.R.elt(y).w) in = in && (I >> s & 1);
      if (in) members.push_back(y);
    }
    if (gens.empty()) {
      if (c.a(0) != 0) w = json{{"I", json::array()}, {"y", ""}, {"a_W", c.a(0)}, {"a_WI", 0}};
      continue;
    }
    std::vector<int> Lsub;
    for (int s : gens) Lsub.push_back(W.gen_weight(s));
    SystemPtr WI = CoxeterSystem::make(W.matrix().restrict_to(gens), Lsub);
    std::unique_ptr<Analysis> sub;
    if (WI->finite())
      sub = Analysis::build(WI, -1, 0, c.mode);
    else
      sub = Analysis::build(WI, c.A.radius, c.A.margin, c.mode);
    for (int y : members) {
      Word wd;
      for (uint8_t s : c.R.elt(y).w) wd.push_back(static_cast<uint8_t>(pos[s]));
      int yi = sub->R().id(WI->from_word(wd));
      if (yi < 0 || yi >= sub->ad->trusted) continue;
      if (!sub->ad->certified[yi]) throw Error("UncertifiedRegion", "a in W_I is not certified");
      if (sub->ad->a[yi] != c.a(y)) {
        json gi = json::array();
        for (int s : gens) gi.push_back(s + 1);
        w = json{{"I", gi}, {"y", c.e(y)}, {"a_W", c.a(y)}, {"a_WI", sub->ad->a[yi]}};
        break;
      }
    }
  }
  return make("P12", c, w);
}

ConjectureReport p13(const Ctx& c) {
  const Cells& L = *c.A.left;
  std::optional<json> w;
  std::set<int> seen;
  for (int x = 0; x < c.T && !w; ++x) {
    int comp = L.component(x);
    if (!seen.insert(comp).second) continue;
    std::vector<int> ds;
    for (int d : c.dExt)
      if (L.component(d) == comp) ds.push_back(d);
    if (ds.size() != 1) {
      json names = json::array();
      for (int d : ds) names.push_back(c.e(d));
      w = json{{"cell_of", c.e(x)}, {"distinguished", names}};
      break;
    }
    for (int y = 0; y < c.T; ++y)
      if (L.component(y) == comp && c.g(c.inv(y), y, ds[0]) == 0) {
        w = json{{"cell_of", c.e(x)}, {"d", c.e(ds[0])}, {"x", c.e(y)}, {"gamma", 0}};
        break;
      }
  }
  return make("P13", c, w);
}

ConjectureReport p14(const Ctx& c) {
  std::optional<json> w;
  for (int z = 0; z < c.T; ++z)
    if (!c.A.two->equiv(z, c.inv(z))) {
      w = json{{"z", c.e(z)}};
      break;
    }
  return make("P14", c, w);
}

ConjectureReport ptilde(const Ctx& c) {
  const auto& adj = c.A.left->edges();  // adj[z] = {z' : z' appears in c_s c_z}
  std::vector<std::tuple<int, int, int>> triples;
  for (auto& [k, g] : c.ad.gamma_table) {
    auto [x, y, zi] = k;
    int z = c.inv(zi);
    if (x < c.T && y < c.T && z < c.T) triples.emplace_back(x, y, z);
  }
  std::sort(triples.begin(), triples.end());
  auto w = sweep(static_cast<int>(triples.size()), c.mode, [&](int i) -> std::optional<json> {
    auto [x, y, z] = triples[i];
    int az = c.a(z);
    for (int zp : adj[z]) {
      if (zp >= c.T) continue;
      bool found = false;
      for (int xp = 0; xp < c.nd && !found; ++xp) found = c.A.ht->h(xp, y, zp).coeff(az) != 0;
      if (!found) return json{{"x", c.e(x)}, {"y", c.e(y)}, {"z", c.e(z)}, {"z'", c.e(zp)}, {"a(z)", az}};
    }
    return std::nullopt;
  });
  return make("Ptilde", c, w);
}

json bi_json(const BiLaurent& b) { return b.str(); }

}  // namespace

ConjectureReport check_p15_bivariate(const Analysis& an) {
  Ctx c(an);
  const HTable& H = *an.ht;
  const int R = an.radius < 0 ? 1 << 20 : an.radius;
  auto len = [&](int i) { return c.R.length(i); };
  auto w = sweep(c.T, c.mode, [&](int x) -> std::optional<json> {
    for (int wv = 0; wv < c.T; ++wv) {
      if (len(x) + len(wv) > R) continue;
      for (int xp = 0; xp < c.T; ++xp) {
        if (len(wv) + len(xp) > R) continue;
        std::map<int, BiLaurent> lhs, rhs;
        for (auto& [yp, h1] : H.h(wv, xp))
          for (auto& [y, h2] : H.h(x, yp))
            if (y < c.T) lhs[y].add_outer(h2, h1);
        for (auto& [yp, h1] : H.h(x, wv))
          for (auto& [y, h2] : H.h(yp, xp))
            if (y < c.T) rhs[y].add_outer(h1, h2);
        std::set<int> ys;
        for (auto& [y, b] : lhs) ys.insert(y);
        for (auto& [y, b] : rhs) ys.insert(y);
        for (int y : ys) {
          if (c.a(y) != c.a(wv)) continue;
          if (!(lhs[y] == rhs[y]))
            return json{{"x", c.e(x)}, {"w", c.e(wv)}, {"x'", c.e(xp)}, {"y", c.e(y)},
                        {"lhs", bi_json(lhs[y])}, {"rhs", bi_json(rhs[y])}};
        }
      }
    }
    return std::nullopt;
  });
  return make("P15", c, w);
}

ConjectureReport check_p15_generators(const Analysis& an) {
  Ctx c(an);
  const HTable& H = *an.ht;
  const Region& R = c.R;
  const int r = R.system().rank();
  auto w = sweep(c.T, c.mode, [&](int wv) -> std::optional<json> {
    for (int s = 0; s < r; ++s)
      for (int sp = 0; sp < r; ++sp) {
        if (R.ldesc(wv, s) || R.rdesc(wv, sp)) continue;
        int cs = R.lmul(s, 0), csp = R.lmul(sp, 0);
        std::map<int, BiLaurent> lhs, rhs;
        for (auto& [yp, h1] : H.h(wv, csp)) {
          if (!(R.rdesc(yp, sp) && !R.ldesc(yp, s))) continue;
          for (auto& [y, h2] : H.h(cs, yp))
            if (y < c.T) lhs[y].add_outer(h2, h1);
        }
        for (auto& [yp, h1] : H.h(cs, wv)) {
          if (!(R.ldesc(yp, s) && !R.rdesc(yp, sp))) continue;
          for (auto& [y, h2] : H.h(yp, csp))
            if (y < c.T) rhs[y].add_outer(h1, h2);
        }
        for (int y = 0; y < c.T; ++y) {
          if (!R.ldesc(y, s) || !R.rdesc(y, sp) || c.a(y) != c.a(wv)) continue;
          if (!(lhs[y] == rhs[y]))
            return json{{"w", c.e(wv)}, {"s", s + 1}, {"s'", sp + 1}, {"y", c.e(y)},
                        {"lhs", bi_json(lhs[y])}, {"rhs", bi_json(rhs[y])}};
        }
      }
    return std::nullopt;
  });
  return make("P15", c, w);
}

ConjectureReport check(const std::string& id, const Analysis& an) {
  Ctx c(an);
  if (id == "P1") return p1(c);
  if (id == "P2") return p2(c);
  if (id == "P3") return p3(c);
  if (id == "P4") return p4(c);
  if (id == "P5") return p5(c);
  if (id == "P6") return p6(c);
  if (id == "P7") return p7(c);
  if (id == "P8") return p8(c);
  if (id == "P9") return p9_11(c, "P9", *an.left);
  if (id == "P10") return p9_11(c, "P10", *an.right);
  if (id == "P11") return p9_11(c, "P11", *an.two);
  if (id == "P12") return p12(c);
  if (id == "P13") return p13(c);
  if (id == "P14") return p14(c);
  if (id == "Ptilde") return ptilde(c);
  if (id == "P15") {
    ConjectureReport a = check_p15_bivariate(an);
    ConjectureReport b = check_p15_generators(an);
    if (a.status != b.status) {
      a.status = Status::Fails;
      a.note = "the bivariate and generator forms disagree";
      for (auto& x : b.witnesses) a.witnesses.push_back(x);
    } else {
      a.note = "bivariate and generator forms agree";
      if (an.radius >= 0) a.note += "; tuples with l(w)+l(x'), l(x)+l(w) <= " + std::to_string(an.radius);
    }
    return a;
  }
  throw Error("UsageError", "unknown property '" + id + "'");
}

std::vector<ConjectureReport> check_all(const Analysis& an, const std::vector<std::string>& only) {
  std::vector<ConjectureReport> out;
  for (auto& id : property_ids())
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) out.push_back(check(id, an));
  for (auto& id : only)
    if (std::find(property_ids().begin(), property_ids().end(), id) == property_ids().end())
      throw Error("UsageError", "unknown property '" + id + "'");
  return out;
}

std::string meta_check(const std::vector<ConjectureReport>& reports) {
  std::map<std::string, Status> st;
  for (auto& r : reports) st[r.id] = r.status;
  for (auto& k : {"P1", "P2", "P3", "Ptilde"})
    if (!st.count(k) || st[k] != Status::Holds) return "not-applicable";
  for (int i = 4; i <= 14; ++i) {
    auto it = st.find("P" + std::to_string(i));
    if (it != st.end() && it->second == Status::Fails) return "implementation-bug: P" + std::to_string(i);
  }
  return "consistent";
}

std::vector<ConjectureReport> quasisplit_compare(const Fold& f, const Analysis& A, const Analysis& B) {
  const Region& R = A.R();
  const Region& RB = B.R();
  if (!R.whole() || !RB.whole()) throw Error("UsageError", "quasisplit comparison needs finite groups");
  const int n = R.size();
  std::vector<int> emb(n);
  for (int i = 0; i < n; ++i) emb[i] = RB.id_or_throw(f.embed(R.elt(i)));
  std::string region = A.describe() + " inside " + B.describe();
  auto mk = [&](const std::string& id, std::optional<json> w) {
    ConjectureReport r;
    r.id = id;
    r.region = region;
    if (w) {
      r.status = Status::Fails;
      r.witnesses.push_back(*w);
    }
    return r;
  };
  auto e = [&](int i) { return R.elt(i).str(); };
  auto pm1 = [](const Int& c) { return c == 1 || c == -1; };
  std::optional<json> wc, we;
  for (int x = 0; x < n && !(wc && we); ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Laurent h = A.ht->h(x, y, z), ht = B.ht->h(emb[x], emb[y], emb[z]);
        std::set<int> exps;
        for (auto& [k, c] : h.terms()) exps.insert(k);
        for (auto& [k, c] : ht.terms()) exps.insert(k);
        for (int k : exps) {
          if (!wc && h.coeff(k) != 0 && ht.coeff(k) == 0)
            wc = json{{"x", e(x)}, {"y", e(y)}, {"z", e(z)}, {"n", k}, {"h", h.str()}, {"h~", ht.str()}};
          if (!we && pm1(ht.coeff(k)) && !pm1(h.coeff(k)))
            we = json{{"x", e(x)}, {"y", e(y)}, {"z", e(z)}, {"n", k}, {"h", h.str()}, {"h~", ht.str()}};
        }
      }
  std::optional<json> wd, wf;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      const Laurent& p = A.kl->p(x, y);
      const Laurent& pt = B.kl->p(emb[x], emb[y]);
      std::set<int> exps;
      for (auto& [k, c] : p.terms()) exps.insert(k);
      for (auto& [k, c] : pt.terms()) exps.insert(k);
      for (int k : exps) {
        if (!wd && p.coeff(k) != 0 && pt.coeff(k) == 0)
          wd = json{{"x", e(x)}, {"y", e(y)}, {"n", k}, {"p", p.str()}, {"p~", pt.str()}};
        if (!wf && pm1(pt.coeff(k)) && !pm1(p.coeff(k)))
          wf = json{{"x", e(x)}, {"y", e(y)}, {"n", k}, {"p", p.str()}, {"p~", pt.str()}};
      }
    }
  std::optional<json> w5;
  for (int z = 0; z < n && !w5; ++z) {
    int a = A.ad->a[z], at = B.ad->a[emb[z]];
    int d = A.ad->delta[z], dt = B.ad->delta[emb[z]];
    if (a != at || dt > d) w5 = json{{"z", e(z)}, {"a", a}, {"a~", at}, {"Delta", d}, {"Delta~", dt}};
  }
  std::optional<json> w6;
  for (int z = 0; z < n && !w6; ++z) {
    bool in = A.ad->a[z] == A.ad->delta[z];
    bool int_ = B.ad->a[emb[z]] == B.ad->delta[emb[z]];
    if (in != int_) w6 = json{{"z", e(z)}, {"in_D", in}, {"in_D~", int_}};
  }
  return {mk("Q16c", wc), mk("Q16d", wd), mk("Q16e", we), mk("Q16f", wf), mk("QA", w5), mk("QD", w6)};
}

}  // namespace wkl
