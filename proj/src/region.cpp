#include "wkl/region.hpp"

namespace wkl {

Region::Region(SystemPtr W, int radius) : W_(std::move(W)), radius_(radius), whole_(radius < 0) {
  if (whole_) {
    if (!W_->finite()) throw Error("InfiniteGroup", "a whole-group region needs finite W");
    radius_ = W_->length(W_->longest_element(W_->all_gens()));
  }
  elts_ = W_->enumerate(radius_);
  const int n = size(), r = W_->rank();
  index_.reserve(n * 2);
  for (int i = 0; i < n; ++i) index_.emplace(elts_[i], i);
  len_.resize(n);
  wt_.resize(n);
  inv_.resize(n);
  ldesc_.assign(n, 0);
  rdesc_.assign(n, 0);
  lmul_.assign(r, std::vector<int>(n, -1));
  rmul_.assign(r, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    len_[i] = elts_[i].length();
    wt_[i] = W_->weight(elts_[i]);
    inv_[i] = id(W_->inverse(elts_[i]));
    for (int s = 0; s < r; ++s) {
      auto [l, dl] = W_->mul_gen(elts_[i], s, Side::Left);
      auto [rr, dr] = W_->mul_gen(elts_[i], s, Side::Right);
      lmul_[s][i] = id(l);
      rmul_[s][i] = id(rr);
      if (dl < 0) ldesc_[i] |= 1u << s;
      if (dr < 0) rdesc_[i] |= 1u << s;
    }
  }
  for (int k = 0; k <= radius_; ++k) {
    int c = 0;
    while (c < n && len_[c] <= k) ++c;
    layer_end_.push_back(c);
  }
  // Bruhat table by the descent recursion
  bruhat_.assign(static_cast<size_t>(n) * n, 0);
  below_.resize(n);
  for (int w = 0; w < n; ++w) {
    char* row = &bruhat_[static_cast<size_t>(w) * n];
    row[w] = 1;
    if (w > 0) {
      int s = first_letter(w);
      int sw = lmul_[s][w];
      const char* prev = &bruhat_[static_cast<size_t>(sw) * n];
      for (int y = 0; y < n && len_[y] < len_[w]; ++y) {
        if (ldesc(y, s))
          row[y] = prev[lmul_[s][y]];
        else
          row[y] = prev[y];
      }
    }
    for (int y = 0; y <= w; ++y)
      if (row[y]) below_[w].push_back(y);
  }
  if (whole_) w0_ = n - 1;
}

int Region::id(const Element& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

int Region::id_or_throw(const Element& e) const {
  int i = id(e);
  if (i < 0) throw Error("RegionTooSmall", "element " + e.str() + " lies outside the region");
  return i;
}

int Region::count_upto(int k) const {
  if (k < 0) return 0;
  if (k >= static_cast<int>(layer_end_.size())) return size();
  return layer_end_[k];
}

int Region::mul(int a, int b) const {
  int r = a;
  for (uint8_t s : elts_[b].w) {
    r = rmul_[s][r];
    if (r < 0) return -1;
  }
  return r;
}

}  // namespace wkl
