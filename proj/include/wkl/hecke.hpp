#pragma once

#include "wkl/region.hpp"
#include "wkl/rings.hpp"

#include <map>
#include <shared_mutex>

namespace wkl {

enum class Basis { T, C };

// Sum of a_w T_w (or a_w c_w), finitely supported.
struct HeckeElt {
  Basis basis = Basis::T;
  std::map<Element, Laurent> terms;

  static HeckeElt basis_elt(const Element& w, Basis b = Basis::T);
  void add(const Element& w, const Laurent& c);
  Laurent coeff(const Element& w) const;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const HeckeElt& o) const { return basis == o.basis && terms == o.terms; }
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt scaled(const Laurent& c) const;

  nlohmann::json to_json() const;
  static HeckeElt from_json(const nlohmann::json& j, const CoxeterSystem& W);
};

inline Laurent v_of(const CoxeterSystem& W, int s) { return Laurent::v(W.gen_weight(s)); }
// v_s - v_s^{-1}
inline Laurent xi_of(const CoxeterSystem& W, int s) { return Laurent::antisym(W.gen_weight(s)); }

// T_s h (Left) or h T_s (Right)
HeckeElt t_mul_gen(const CoxeterSystem& W, int s, const HeckeElt& h, Side side);
HeckeElt t_mul(const CoxeterSystem& W, const HeckeElt& a, const HeckeElt& b);

// Memoized r_{y,w}.
class RCache {
public:
  explicit RCache(SystemPtr W) : W_(std::move(W)) {}
  Laurent r(const Element& y, const Element& w) const;
  const CoxeterSystem& system() const { return *W_; }

private:
  SystemPtr W_;
  mutable std::shared_mutex mu_;
  mutable std::map<std::pair<Word, Word>, Laurent> memo_;
};

HeckeElt bar_elt(const RCache& R, const HeckeElt& h);
HeckeElt flat(const CoxeterSystem& W, const HeckeElt& h);
HeckeElt dagger(const RCache& R, const HeckeElt& h);
Laurent tau(const HeckeElt& h);

// ---- dense kernels over a Region ----

// Coefficients indexed by region id.
using TVec = std::vector<Laurent>;

// out = T_s x (Left) or x T_s (Right); RegionTooSmall if the support leaves the region.
void apply_t(const Region& R, int s, Side side, const TVec& x, TVec& out);
// out = c_s x with c_s = T_s + v_s^{-1} (or T_s when L(s) = 0)
void apply_c(const Region& R, int s, Side side, const TVec& x, TVec& out);

// Dense r-table: r_{y,w} for y, w in the region.
class RTable {
public:
  explicit RTable(RegionPtr R);
  const Laurent& r(int y, int w) const { return t_[static_cast<size_t>(w) * n_ + y]; }
  const Region& region() const { return *R_; }

private:
  RegionPtr R_;
  int n_;
  std::vector<Laurent> t_;
};

// bar of a T-basis vector using the r-table
TVec bar_vec(const RTable& rt, const TVec& x);

HeckeElt to_elt(const Region& R, const TVec& x, Basis b = Basis::T);
TVec to_vec(const Region& R, const HeckeElt& h);

}  // namespace wkl
