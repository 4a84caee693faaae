#include "wkl/hecke.hpp"

#include <mutex>

namespace wkl {

HeckeElt HeckeElt::basis_elt(const Element& w, Basis b) {
  HeckeElt h;
  h.basis = b;
  h.terms.emplace(w, Laurent(1));
  return h;
}

void HeckeElt::add(const Element& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Laurent HeckeElt::coeff(const Element& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Laurent() : it->second;
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  if (o.basis != basis) throw Error("BasisMismatch", "cannot add T- and c-basis elements");
  for (auto& [w, c] : o.terms) add(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  if (o.basis != basis) throw Error("BasisMismatch", "cannot add T- and c-basis elements");
  for (auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

HeckeElt HeckeElt::scaled(const Laurent& c) const {
  HeckeElt r;
  r.basis = basis;
  for (auto& [w, a] : terms) r.add(w, a * c);
  return r;
}

nlohmann::json HeckeElt::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (auto& [w, c] : terms) t.push_back({w.str(), c.to_json()});
  return {{"basis", basis == Basis::T ? "T" : "C"}, {"terms", t}};
}

HeckeElt HeckeElt::from_json(const nlohmann::json& j, const CoxeterSystem& W) {
  HeckeElt h;
  std::string b = j.at("basis").get<std::string>();
  if (b != "T" && b != "C") throw Error("ParseError", "basis must be T or C");
  h.basis = b == "T" ? Basis::T : Basis::C;
  for (auto& p : j.at("terms")) h.add(W.parse(p.at(0).get<std::string>()), Laurent::from_json(p.at(1)));
  return h;
}

HeckeElt t_mul_gen(const CoxeterSystem& W, int s, const HeckeElt& h, Side side) {
  if (h.basis != Basis::T) throw Error("BasisMismatch", "t_mul_gen expects the T-basis");
  HeckeElt r;
  Laurent xi = xi_of(W, s);
  for (auto& [y, c] : h.terms) {
    auto [sy, d] = W.mul_gen(y, s, side);
    r.add(sy, c);
    if (d < 0) r.add(y, c * xi);
  }
  return r;
}

HeckeElt t_mul(const CoxeterSystem& W, const HeckeElt& a, const HeckeElt& b) {
  if (a.basis != Basis::T || b.basis != Basis::T)
    throw Error("BasisMismatch", "t_mul expects the T-basis");
  HeckeElt out;
  if (a.terms.size() <= b.terms.size()) {
    for (auto& [u, c] : a.terms) {
      HeckeElt x = b;
      for (auto it = u.w.rbegin(); it != u.w.rend(); ++it) x = t_mul_gen(W, *it, x, Side::Left);
      out += x.scaled(c);
    }
  } else {
    for (auto& [u, c] : b.terms) {
      HeckeElt x = a;
      for (uint8_t s : u.w) x = t_mul_gen(W, s, x, Side::Right);
      out += x.scaled(c);
    }
  }
  return out;
}

Laurent RCache::r(const Element& y, const Element& w) const {
  if (y == w) return 1;
  if (y.length() >= w.length() || !W_->bruhat_leq(y, w)) return 0;
  auto key = std::make_pair(y.w, w.w);
  {
    std::shared_lock lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  int s = w.w[0];
  Element sw = W_->mul_gen(w, s, Side::Left).first;
  auto [sy, d] = W_->mul_gen(y, s, Side::Left);
  Laurent res = r(sy, sw);
  if (d > 0) res.add_mul(xi_of(*W_, s), r(y, sw));
  std::unique_lock lk(mu_);
  memo_.emplace(std::move(key), res);
  return res;
}

HeckeElt bar_elt(const RCache& R, const HeckeElt& h) {
  if (h.basis != Basis::T) throw Error("BasisMismatch", "bar_elt expects the T-basis");
  const CoxeterSystem& W = R.system();
  HeckeElt out;
  for (auto& [w, c] : h.terms) {
    Laurent cb = c.bar();
    for (auto& y : W.enumerate(w.length())) {
      if (!W.bruhat_leq(y, w)) continue;
      out.add(y, cb * R.r(y, w).bar());
    }
  }
  return out;
}

HeckeElt flat(const CoxeterSystem& W, const HeckeElt& h) {
  HeckeElt out;
  out.basis = h.basis;
  for (auto& [w, c] : h.terms) out.add(W.inverse(w), c);
  return out;
}

HeckeElt dagger(const RCache& R, const HeckeElt& h) {
  if (h.basis != Basis::T) throw Error("BasisMismatch", "dagger expects the T-basis");
  const CoxeterSystem& W = R.system();
  HeckeElt out;
  for (auto& [w, c] : h.terms) {
    Laurent sc = W.sign(w) < 0 ? -c : c;
    for (auto& y : W.enumerate(w.length())) {
      if (!W.bruhat_leq(y, w)) continue;
      out.add(y, sc * R.r(y, w).bar());
    }
  }
  return out;
}

Laurent tau(const HeckeElt& h) {
  if (h.basis != Basis::T) throw Error("BasisMismatch", "tau expects the T-basis");
  return h.coeff(Element{});
}

// ---- dense kernels ----

void apply_t(const Region& R, int s, Side side, const TVec& x, TVec& out) {
  const int n = R.size();
  out.assign(n, Laurent());
  Laurent xi = xi_of(R.system(), s);
  for (int y = 0; y < n; ++y) {
    if (x[y].is_zero()) continue;
    int sy = R.mul(s, y, side);
    if (sy < 0) throw Error("RegionTooSmall", "T-basis product leaves the region");
    out[sy] += x[y];
    if (R.desc(y, s, side)) out[y].add_mul(xi, x[y]);
  }
}

void apply_c(const Region& R, int s, Side side, const TVec& x, TVec& out) {
  apply_t(R, s, side, x, out);
  int L = R.system().gen_weight(s);
  if (L == 0) return;
  Laurent vinv = Laurent::v(-L);
  for (int y = 0; y < R.size(); ++y)
    if (!x[y].is_zero()) out[y].add_mul(vinv, x[y]);
}

RTable::RTable(RegionPtr R) : R_(std::move(R)), n_(R_->size()) {
  t_.assign(static_cast<size_t>(n_) * n_, Laurent());
  const CoxeterSystem& W = R_->system();
  for (int w = 0; w < n_; ++w) {
    Laurent* col = &t_[static_cast<size_t>(w) * n_];
    col[w] = 1;
    if (w == 0) continue;
    int s = R_->first_letter(w);
    int sw = R_->lmul(s, w);
    const Laurent* prev = &t_[static_cast<size_t>(sw) * n_];
    Laurent xi = xi_of(W, s);
    for (int y : R_->below(w)) {
      if (y == w) continue;
      int sy = R_->lmul(s, y);
      col[y] = prev[sy];
      if (!R_->ldesc(y, s)) col[y].add_mul(xi, prev[y]);
    }
  }
}

TVec bar_vec(const RTable& rt, const TVec& x) {
  const Region& R = rt.region();
  TVec out(R.size());
  for (int w = 0; w < R.size(); ++w) {
    if (x[w].is_zero()) continue;
    Laurent cb = x[w].bar();
    for (int y : R.below(w)) out[y].add_mul(cb, rt.r(y, w).bar());
  }
  return out;
}

HeckeElt to_elt(const Region& R, const TVec& x, Basis b) {
  HeckeElt h;
  h.basis = b;
  for (int i = 0; i < R.size(); ++i)
    if (!x[i].is_zero()) h.terms.emplace(R.elt(i), x[i]);
  return h;
}

TVec to_vec(const Region& R, const HeckeElt& h) {
  TVec x(R.size());
  for (auto& [w, c] : h.terms) x[R.id_or_throw(w)] = c;
  return x;
}

}  // namespace wkl
