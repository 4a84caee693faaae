#pragma once

#include "wkl/coxeter.hpp"

#include <memory>
#include <unordered_map>
#include <vector>

namespace wkl {

// A finite set of elements closed under taking shorter elements: the length ball of
// a given radius, or the whole group when W is finite. Elements get dense ids in
// ShortLex order, so ids increase with length and Bruhat order refines id order.
class Region {
public:
  // radius < 0 means all of W (finite W only)
  Region(SystemPtr W, int radius);

  const CoxeterSystem& system() const { return *W_; }
  SystemPtr system_ptr() const { return W_; }
  int radius() const { return radius_; }
  bool whole() const { return whole_; }
  int size() const { return static_cast<int>(elts_.size()); }

  const Element& elt(int id) const { return elts_[id]; }
  const std::vector<Element>& elements() const { return elts_; }
  int id(const Element& e) const;  // -1 if outside
  int id_or_throw(const Element& e) const;

  int length(int id) const { return len_[id]; }
  int weight(int id) const { return wt_[id]; }
  int inverse(int id) const { return inv_[id]; }
  // -1 when the product leaves the region
  int lmul(int s, int id) const { return lmul_[s][id]; }
  int rmul(int s, int id) const { return rmul_[s][id]; }
  int mul(int s, int id, Side side) const { return side == Side::Left ? lmul(s, id) : rmul(s, id); }
  bool ldesc(int id, int s) const { return ldesc_[id] >> s & 1; }
  bool rdesc(int id, int s) const { return rdesc_[id] >> s & 1; }
  bool desc(int id, int s, Side side) const { return side == Side::Left ? ldesc(id, s) : rdesc(id, s); }
  GenSet descents(int id, Side side) const { return side == Side::Left ? ldesc_[id] : rdesc_[id]; }
  int first_letter(int id) const { return elts_[id].w[0]; }

  bool leq(int y, int w) const { return bruhat_[static_cast<size_t>(w) * size() + y]; }
  // ids y with y <= w
  const std::vector<int>& below(int w) const { return below_[w]; }
  // ids with length <= k
  int count_upto(int k) const;
  int longest() const { return w0_; }  // -1 unless whole
  // product within the region, -1 if it leaves
  int mul(int a, int b) const;

private:
  SystemPtr W_;
  int radius_;
  bool whole_;
  std::vector<Element> elts_;
  std::unordered_map<Element, int, ElementHash> index_;
  std::vector<int> len_, wt_, inv_;
  std::vector<std::vector<int>> lmul_, rmul_;
  std::vector<GenSet> ldesc_, rdesc_;
  std::vector<char> bruhat_;
  std::vector<std::vector<int>> below_;
  std::vector<int> layer_end_;
  int w0_ = -1;
};

using RegionPtr = std::shared_ptr<const Region>;

}  // namespace wkl
