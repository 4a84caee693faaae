#pragma once

#include "wkl/hecke.hpp"

#include <mutex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace wkl {

// Parallel runs the OpenMP kernels; Serial runs the plain reference loops.
enum class Mode { Serial, Parallel };

using CVec = std::vector<std::pair<int, Laurent>>;  // sparse c-basis expansion, ids ascending

// p_{y,w} and mu^s_{y,w} for every w in a region, computed one length layer at a time.
class KLTable {
public:
  explicit KLTable(RegionPtr R, Mode mode = Mode::Parallel, std::string cache_dir = "");

  const Region& region() const { return *R_; }
  RegionPtr region_ptr() const { return R_; }
  Mode mode() const { return mode_; }

  const Laurent& p(int y, int w) const { return cols_[w][y]; }
  Laurent p(const Element& y, const Element& w) const;
  // c_w in the T-basis
  const TVec& col(int w) const { return cols_[w]; }
  HeckeElt c(const Element& w) const;

  // mu^s_{y,w}; requires sy<y<w<sw and L(s)>0 (sw may leave the region)
  Laurent mu(int s, int y, int w) const;
  const CVec& mu_col(int s, int w) const { return mu_[s][w]; }

  // c_s c_w (Left) or c_w c_s (Right) in the c-basis. With `truncate` the terms that
  // fall outside the region are dropped instead of raising RegionTooSmall.
  CVec cs_mul_c(int s, int w, Side side, bool truncate = false) const;

  // T-basis vector to c-basis by triangular elimination, highest id first
  CVec to_c_basis(TVec h) const;

  const Laurent& qprime(int y, int w) const;
  Laurent q(int y, int w) const;
  // D_z(h) for a T-basis vector h
  Laurent d_functional(int z, const TVec& h) const;

  void dump_csv(std::ostream& os) const;  // y,w,p
  nlohmann::json column_json(int w) const;

private:
  void compute_column(int w);
  void compute_mu(int s, int w);
  void ensure_qprime() const;
  bool load_column(int w);
  void save_column(int w) const;

  RegionPtr R_;
  Mode mode_;
  std::string cache_dir_;
  std::vector<TVec> cols_;
  std::vector<std::vector<CVec>> mu_;  // [s][w]
  mutable std::once_flag q_once_;
  mutable std::vector<Laurent> qp_;  // [w * n + y]
};

// c_x c_y = sum h_{x,y,z} c_z for x, y in the ball of radius `domain_radius`.
class HTable {
public:
  HTable(const KLTable& kl, int domain_radius, Mode mode = Mode::Parallel);

  const KLTable& kl() const { return *kl_; }
  int domain_radius() const { return dr_; }
  int domain_size() const { return nd_; }
  const CVec& h(int x, int y) const { return h_[static_cast<size_t>(x) * nd_ + y]; }
  Laurent h(int x, int y, int z) const;

private:
  void build_parallel();
  void build_serial();
  const KLTable* kl_;
  int dr_, nd_;
  std::vector<CVec> h_;
};

// Independent oracle: p_{y,w} from bar-invariance and the r-polynomials alone.
Laurent p_via_r(const RTable& rt, int y, int w);
// the whole column {y: p_{y,w}}
TVec p_column_via_r(const RTable& rt, int w);

}  // namespace wkl
