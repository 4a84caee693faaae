#include "wkl/kl.hpp"

#include <filesystem>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wkl {

namespace fs = std::filesystem;

KLTable::KLTable(RegionPtr R, Mode mode, std::string cache_dir)
    : R_(std::move(R)), mode_(mode), cache_dir_(std::move(cache_dir)) {
  const int n = R_->size(), r = R_->system().rank();
  cols_.assign(n, TVec());
  mu_.assign(r, std::vector<CVec>(n));
  const int top = R_->radius();
  for (int k = 0; k <= top; ++k) {
    const int lo = R_->count_upto(k - 1), hi = R_->count_upto(k);
    if (mode_ == Mode::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (int w = lo; w < hi; ++w) compute_column(w);
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < (hi - lo) * r; ++i) compute_mu(i % r, lo + i / r);
    } else {
      for (int w = lo; w < hi; ++w) compute_column(w);
      for (int w = lo; w < hi; ++w)
        for (int s = 0; s < r; ++s) compute_mu(s, w);
    }
  }
}

void KLTable::compute_column(int w) {
  if (load_column(w)) return;
  const Region& R = *R_;
  if (w == 0) {
    cols_[0].assign(R.size(), Laurent());
    cols_[0][0] = 1;
    return;
  }
  int s = R.first_letter(w);
  int sw = R.lmul(s, w);
  TVec out;
  apply_c(R, s, Side::Left, cols_[sw], out);
  for (auto& [z, m] : mu_[s][sw])
    for (int y : R.below(z))
      if (!cols_[z][y].is_zero()) out[y].sub_mul(m, cols_[z][y]);
  cols_[w] = std::move(out);
  save_column(w);
}

void KLTable::compute_mu(int s, int w) {
  const Region& R = *R_;
  if (R.ldesc(w, s) || R.system().gen_weight(s) == 0) return;
  Laurent vs = v_of(R.system(), s);
  const auto& below = R.below(w);
  CVec found;  // descending ids
  for (auto it = below.rbegin(); it != below.rend(); ++it) {
    int y = *it;
    if (y == w || !R.ldesc(y, s)) continue;
    Laurent t = vs * cols_[w][y];
    for (auto& [z, m] : found)
      if (!cols_[z][y].is_zero()) t.sub_mul(cols_[z][y], m);
    if (t.is_zero() || t.max_exp() < 0) continue;
    Laurent pos = t.truncate(1, t.max_exp());
    Laurent m = t.truncate(0, t.max_exp()) + pos.bar();
    if (!m.is_zero()) found.emplace_back(y, std::move(m));
  }
  mu_[s][w].assign(found.rbegin(), found.rend());
}

Laurent KLTable::p(const Element& y, const Element& w) const {
  int iw = R_->id_or_throw(w);
  int iy = R_->id(y);
  return iy < 0 ? Laurent() : cols_[iw][iy];
}

HeckeElt KLTable::c(const Element& w) const { return to_elt(*R_, cols_[R_->id_or_throw(w)]); }

Laurent KLTable::mu(int s, int y, int w) const {
  const Region& R = *R_;
  if (!(R.ldesc(y, s) && !R.ldesc(w, s) && y != w && R.length(y) < R.length(w)))
    throw Error("PreconditionViolated", "mu^s_{y,w} needs sy<y<w<sw");
  if (R.system().gen_weight(s) == 0) throw Error("PreconditionViolated", "mu^s needs L(s)>0");
  for (auto& [z, m] : mu_[s][w])
    if (z == y) return m;
  return Laurent();
}

CVec KLTable::cs_mul_c(int s, int w, Side side, bool truncate) const {
  const Region& R = *R_;
  const CoxeterSystem& W = R.system();
  std::map<int, Laurent> acc;
  int L = W.gen_weight(s);
  if (R.desc(w, s, side)) {
    if (L == 0) return {{R.mul(s, w, side), Laurent(1)}};
    return {{w, Laurent::sym(L)}};
  }
  int sw = R.mul(s, w, side);
  if (sw >= 0)
    acc[sw] += Laurent(1);
  else if (!truncate)
    throw Error("RegionTooSmall", "c_s c_w leaves the region");
  if (L > 0) {
    if (side == Side::Left) {
      for (auto& [z, m] : mu_[s][w]) acc[z] += m;
    } else {
      // c_w c_s = flat(c_s c_{w^-1})
      for (auto& [z, m] : mu_[s][R.inverse(w)]) acc[R.inverse(z)] += m;
    }
  }
  CVec out;
  for (auto& [z, m] : acc)
    if (!m.is_zero()) out.emplace_back(z, m);
  return out;
}

CVec KLTable::to_c_basis(TVec h) const {
  CVec out;
  for (int z = static_cast<int>(h.size()) - 1; z >= 0; --z) {
    if (h[z].is_zero()) continue;
    Laurent c = std::move(h[z]);
    h[z] = Laurent();
    for (int y : R_->below(z))
      if (y != z && !cols_[z][y].is_zero()) h[y].sub_mul(c, cols_[z][y]);
    out.emplace_back(z, std::move(c));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void KLTable::ensure_qprime() const {
  std::call_once(q_once_, [this] {
    const int n = R_->size();
    qp_.assign(static_cast<size_t>(n) * n, Laurent());
    auto at = [&](int y, int w) -> Laurent& { return qp_[static_cast<size_t>(w) * n + y]; };
    auto row = [&](int y) {
      at(y, y) = 1;
      for (int w = y + 1; w < n; ++w) {
        if (!R_->leq(y, w)) continue;
        Laurent acc;
        for (int z : R_->below(w))
          if (z != w && R_->leq(y, z) && !cols_[w][z].is_zero()) acc.add_mul(at(y, z), cols_[w][z]);
        at(y, w) = -acc;
      }
    };
    if (mode_ == Mode::Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (int y = 0; y < n; ++y) row(y);
    } else {
      for (int y = 0; y < n; ++y) row(y);
    }
  });
}

const Laurent& KLTable::qprime(int y, int w) const {
  ensure_qprime();
  return qp_[static_cast<size_t>(w) * R_->size() + y];
}

Laurent KLTable::q(int y, int w) const {
  Laurent r = qprime(y, w);
  return (R_->length(y) + R_->length(w)) % 2 ? -r : r;
}

Laurent KLTable::d_functional(int z, const TVec& h) const {
  Laurent acc;
  for (int y = z; y < static_cast<int>(h.size()); ++y)
    if (!h[y].is_zero()) acc.add_mul(qprime(z, y), h[y]);
  return acc;
}

void KLTable::dump_csv(std::ostream& os) const {
  os << "y,w,p\n";
  for (int w = 0; w < R_->size(); ++w)
    for (int y : R_->below(w))
      os << R_->elt(y).str() << ',' << R_->elt(w).str() << ',' << cols_[w][y].str() << '\n';
}

nlohmann::json KLTable::column_json(int w) const {
  nlohmann::json j;
  j["w"] = R_->elt(w).str();
  nlohmann::json t = nlohmann::json::array();
  for (int y : R_->below(w))
    if (!cols_[w][y].is_zero()) t.push_back({R_->elt(y).str(), cols_[w][y].to_json()});
  j["p"] = t;
  return j;
}

bool KLTable::load_column(int w) {
  if (cache_dir_.empty()) return false;
  fs::path f = fs::path(cache_dir_) / R_->system().hash() / "p" / (R_->elt(w).str() + ".json");
  if (w == 0) f = f.parent_path() / "identity.json";
  std::ifstream in(f);
  if (!in) return false;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    TVec col(R_->size());
    for (auto& e : j.at("p")) col[R_->id_or_throw(R_->system().parse(e.at(0).get<std::string>()))] = Laurent::from_json(e.at(1));
    cols_[w] = std::move(col);
    return true;
  } catch (const std::exception&) {
    return false;  // unreadable cache entries are recomputed
  }
}

void KLTable::save_column(int w) const {
  if (cache_dir_.empty()) return;
  fs::path d = fs::path(cache_dir_) / R_->system().hash() / "p";
  std::error_code ec;
  fs::create_directories(d, ec);
  fs::path f = d / (w == 0 ? std::string("identity.json") : R_->elt(w).str() + ".json");
  std::ofstream(f) << column_json(w).dump() << '\n';
}

// ---- h-table ----

HTable::HTable(const KLTable& kl, int domain_radius, Mode mode) : kl_(&kl), dr_(domain_radius) {
  const Region& R = kl.region();
  if (!R.whole() && 2 * dr_ > R.radius())
    throw Error("RegionTooSmall", "the KL region must have radius >= 2 * domain radius");
  if (R.whole()) dr_ = std::min(dr_, R.radius());
  nd_ = R.count_upto(dr_);
  h_.assign(static_cast<size_t>(nd_) * nd_, CVec());
  if (mode == Mode::Parallel)
    build_parallel();
  else
    build_serial();
}

Laurent HTable::h(int x, int y, int z) const {
  for (auto& [zz, c] : h(x, y))
    if (zz == z) return c;
  return Laurent();
}

void HTable::build_parallel() {
  const KLTable& kl = *kl_;
  const Region& R = kl.region();
  const int n = R.size();
#pragma omp parallel for schedule(dynamic)
  for (int y = 0; y < nd_; ++y) {
    // X[u] = T_u c_y
    std::vector<TVec> X(nd_);
    X[0] = kl.col(y);
    for (int u = 1; u < nd_; ++u) {
      int s = R.first_letter(u);
      apply_t(R, s, Side::Left, X[R.lmul(s, u)], X[u]);
    }
    for (int x = 0; x < nd_; ++x) {
      TVec prod(n);
      for (int u : R.below(x)) {
        const Laurent& pux = kl.p(u, x);
        if (pux.is_zero()) continue;
        const TVec& xu = X[u];
        for (int z = 0; z < n; ++z)
          if (!xu[z].is_zero()) prod[z].add_mul(pux, xu[z]);
      }
      h_[static_cast<size_t>(x) * nd_ + y] = kl.to_c_basis(std::move(prod));
    }
  }
}

void HTable::build_serial() {
  const KLTable& kl = *kl_;
  const Region& R = kl.region();
  const int n = R.size();
  for (int x = 0; x < nd_; ++x)
    for (int y = 0; y < nd_; ++y) {
      TVec prod(n), tmp;
      for (int u = 0; u < n; ++u) {
        const Laurent& pux = kl.col(x)[u];
        if (pux.is_zero()) continue;
        TVec cur = kl.col(y);
        const Word& word = R.elt(u).w;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
          apply_t(R, *it, Side::Left, cur, tmp);
          cur.swap(tmp);
        }
        for (int z = 0; z < n; ++z)
          if (!cur[z].is_zero()) prod[z].add_mul(pux, cur[z]);
      }
      h_[static_cast<size_t>(x) * nd_ + y] = kl.to_c_basis(std::move(prod));
    }
}

// ---- r-based oracle ----

TVec p_column_via_r(const RTable& rt, int w) {
  const Region& R = rt.region();
  TVec u(R.size());
  u[w] = 1;
  const auto& below = R.below(w);
  for (auto it = below.rbegin(); it != below.rend(); ++it) {
    int x = *it;
    if (x == w) continue;
    // bar(u_x) - u_x = sum_{x<y<=w} r_{x,y} u_y, with u_x in A_{<0}
    Laurent a;
    for (int y : below)
      if (y > x && !u[y].is_zero() && R.leq(x, y)) a.add_mul(rt.r(x, y), u[y]);
    if (!a.is_zero() && a.min_exp() < 0) u[x] = -a.truncate(a.min_exp(), -1);
  }
  return u;
}

Laurent p_via_r(const RTable& rt, int y, int w) { return p_column_via_r(rt, w)[y]; }

}  // namespace wkl
