#include "wkl/oracle_diff.hpp"

#include "wkl/jring.hpp"

#include <set>

namespace wkl {

using dihedral_oracle::DElt;

nlohmann::json OracleDiffReport::to_json() const {
  nlohmann::json j{{"system", system}, {"checks", checks}, {"discrepancies", diffs.size()}};
  j["per_check"] = per_check;
  nlohmann::json d = nlohmann::json::array();
  for (auto& x : diffs)
    d.push_back({{"check", x.check}, {"input", x.input}, {"oracle", x.oracle}, {"generic", x.generic}});
  j["details"] = d;
  return j;
}

namespace {

struct Differ {
  const dihedral_oracle::Oracle& O;
  const Analysis& A;
  OracleDiffReport& rep;

  const Region& R() const { return A.R(); }
  int id(const DElt& w) const {
    Word wd;
    for (int a : O.word(w)) wd.push_back(static_cast<uint8_t>(a - 1));
    return R().id(R().system().from_word(wd));
  }
  DElt back(int i) const {
    const Element& e = R().elt(i);
    return e.w.empty() ? O.elt(1, 0) : O.elt(e.w[0] + 1, e.length());
  }
  void count(const std::string& c) {
    ++rep.checks;
    ++rep.per_check[c];
  }
  void fail(const std::string& c, const std::string& in, const std::string& o, const std::string& g) {
    rep.diffs.push_back({c, in, o, g});
  }
  std::string sum_str(const std::map<DElt, Laurent>& s, const char* basis) const {
    std::string out;
    for (auto& [w, c] : s) out += (out.empty() ? "" : " + ") + std::string("(") + c.str() + ")" + basis + "_" + O.str(w);
    return out.empty() ? "0" : out;
  }
  // the oracle's map against a dense generic vector over region ids
  template <class Get>
  void compare_map(const std::string& c, const std::string& in, const std::map<DElt, Laurent>& o, Get get,
                   const std::vector<int>& ids, const char* basis) {
    count(c);
    std::map<DElt, Laurent> g;
    for (int i : ids) {
      Laurent v = get(i);
      if (!v.is_zero()) g[back(i)] = v;
    }
    if (g != o) fail(c, in, sum_str(o, basis), sum_str(g, basis));
  }
};

bool within(const Region& R, int id, int len) { return id >= 0 && R.length(id) <= len; }

}  // namespace

OracleDiffReport oracle_diff(int m, int L1, int L2, int window, int margin, Mode mode) {
  dihedral_oracle::Oracle O(m, L1, L2);
  SystemPtr W = dihedral(m == 0 ? kInf : m, L1, L2);
  auto A = m == 0 ? Analysis::build(W, window, margin, mode) : Analysis::build(W, -1, 0, mode);
  OracleDiffReport rep;
  rep.system = A->describe();
  Differ D{O, *A, rep};
  const Region& R = A->R();
  const KLTable& kl = *A->kl;
  const int domain_len = m == 0 ? window : m;
  const int trusted_len = m == 0 ? window - margin : m;
  std::vector<int> all(R.size());
  for (int i = 0; i < R.size(); ++i) all[i] = i;

  // c_w in the T-basis
  if (L1 <= L2)
    for (const DElt& w : O.elements(R.whole() ? m : 2 * window)) {
      int wi = D.id(w);
      D.compare_map("c-basis", O.str(w), O.c_closed_form(w), [&](int y) { return kl.p(y, wi); }, all, "T");
    }

  // c_x c_y in the c-basis
  if (L1 <= L2)
    for (const DElt& x : O.elements(domain_len))
      for (const DElt& y : O.elements(domain_len)) {
        dihedral_oracle::CSum o;
        try {
          o = O.product(x, y);
        } catch (const Error& e) {
          if (e.name() == "OutOfCoverage") continue;
          throw;
        }
        int xi = D.id(x), yi = D.id(y);
        std::map<int, Laurent> g;
        for (auto& [z, c] : A->ht->h(xi, yi)) g[z] = c;
        D.compare_map("product", O.str(x) + "*" + O.str(y), o,
                      [&](int z) { auto it = g.find(z); return it == g.end() ? Laurent() : it->second; }, all, "c");
      }

  // T_x T_y
  if (m == 0)
    for (const DElt& x : O.elements(6))
      for (const DElt& y : O.elements(6)) {
        HeckeElt hx = HeckeElt::basis_elt(R.elt(D.id(x))), hy = HeckeElt::basis_elt(R.elt(D.id(y)));
        HeckeElt g = t_mul(*W, hx, hy);
        TVec gv = to_vec(R, g);
        D.compare_map("T-table", O.str(x) + "*" + O.str(y), O.t_product(x, y), [&](int z) { return gv[z]; }, all, "T");
      }

  // the p_0 coefficient for the top product of 2_{m-1}
  if (m >= 4 && m % 2 == 0 && L2 > L1) {
    D.count("p0");
    int w = D.id(O.elt(2, m - 1));
    Laurent g = A->ht->h(w, w, w), o = O.p0();
    if (g != o) D.fail("p0", "2_" + std::to_string(m - 1), o.str(), g.str());
  }

  // D_{s_1}
  if (L2 > L1) {
    const int len = m == 0 ? std::min(10, 2 * window) : m;
    auto o = O.d_s1(len);
    int s1 = D.id(O.elt(1, 1));
    std::vector<int> ids;
    for (int i = 0; i < R.size(); ++i)
      if (R.length(i) <= len) ids.push_back(i);
    D.compare_map("D_s1", "l(y)<=" + std::to_string(len), o,
                  [&](int y) {
                    TVec t(R.size());
                    t[y] = 1;
                    return kl.d_functional(s1, t);
                  },
                  ids, "T");
  }

  const AData& ad = *A->ad;
  std::vector<DElt> trusted = O.elements(trusted_len);

  // a-values
  if (L1 <= L2 && (m == 0 || m >= 3)) {
    for (auto& [w, a] : O.a_table(trusted_len)) {
      D.count("a");
      int i = D.id(w);
      if (!ad.certified[i]) D.fail("a", O.str(w), std::to_string(a), "uncertified");
      else if (ad.a[i] != a) D.fail("a", O.str(w), std::to_string(a), std::to_string(ad.a[i]));
    }
  }

  if (m == 0 && L2 > L1) {
    for (auto& [w, d] : O.delta_table(trusted_len)) {
      D.count("Delta");
      int i = D.id(w);
      if (ad.delta[i] != d) D.fail("Delta", O.str(w), std::to_string(d), std::to_string(ad.delta[i]));
    }
    D.count("D");
    std::set<DElt> od, gd;
    for (auto& d : O.dset(trusted_len)) od.insert(d);
    for (int d : ad.dset()) gd.insert(D.back(d));
    auto set_str = [&](const std::set<DElt>& s) {
      std::string out;
      for (auto& w : s) out += (out.empty() ? "" : ",") + O.str(w);
      return "{" + out + "}";
    };
    if (od != gd) D.fail("D", "l<=" + std::to_string(trusted_len), set_str(od), set_str(gd));

    D.count("gamma-D");
    std::set<std::tuple<DElt, DElt, DElt>> ot, gt;
    for (auto& t : O.gamma_d_triples(trusted_len)) ot.insert(t);
    for (auto& [k, g] : ad.gamma_table) {
      auto [x, y, z] = k;
      if (within(R, x, trusted_len) && within(R, y, trusted_len) && within(R, z, trusted_len) &&
          gd.count(D.back(z)))
        gt.insert({D.back(x), D.back(y), D.back(z)});
    }
    if (ot != gt) {
      auto ts = [&](const std::set<std::tuple<DElt, DElt, DElt>>& s) {
        std::string out;
        for (auto& [x, y, z] : s) out += "(" + O.str(x) + "," + O.str(y) + "," + O.str(z) + ")";
        return out;
      };
      D.fail("gamma-D", "l<=" + std::to_string(trusted_len), ts(ot), ts(gt));
    }
  }

  // J products
  if (L1 <= L2) {
    JTable J(*A);
    for (const DElt& x : trusted)
      for (const DElt& y : trusted) {
        dihedral_oracle::JSum o;
        try {
          o = O.j_product(x, y);
        } catch (const Error& e) {
          if (e.name() == "OutOfCoverage") continue;
          throw;
        }
        D.count("J");
        dihedral_oracle::JSum g;
        for (auto& [z, c] : J.product(D.id(x), D.id(y)).terms) g[D.back(z)] = c;
        if (o != g) {
          auto js = [&](const dihedral_oracle::JSum& s) {
            std::string out;
            for (auto& [w, c] : s) out += (out.empty() ? "" : " + ") + std::to_string(c) + "t_" + O.str(w);
            return out.empty() ? "0" : out;
          };
          D.fail("J", O.str(x) + "*" + O.str(y), js(o), js(g));
        }
      }
  }

  // cells
  if (L1 <= L2) {
    auto cmp = [&](const std::string& name, const Cells& C, bool two) {
      D.count(name);
      const int tl = C.trusted_radius();
      auto o = two ? O.two_sided_cells(tl) : O.left_cells(tl);
      std::vector<std::vector<DElt>> g;
      for (auto& b : C.partition().blocks) {
        std::vector<DElt> gb;
        for (int i : b) gb.push_back(D.back(i));
        g.push_back(gb);
      }
      std::sort(o.begin(), o.end());
      std::sort(g.begin(), g.end());
      if (o != g) {
        auto ps = [&](const std::vector<std::vector<DElt>>& p) {
          std::string out;
          for (auto& b : p) {
            out += "{";
            for (size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + O.str(b[i]);
            out += "}";
          }
          return out;
        };
        D.fail(name, "l<=" + std::to_string(tl), ps(o), ps(g));
      }
    };
    cmp("left cells", *A->left, false);
    cmp("two-sided cells", *A->two, true);
  }
  return rep;
}

}  // namespace wkl
