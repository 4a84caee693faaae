#pragma once

#include "wkl/kl.hpp"

namespace wkl {

enum class CellKind { Left, Right, TwoSided };
std::string kind_name(CellKind k);
CellKind parse_kind(const std::string& s);

struct CellPartition {
  CellKind kind = CellKind::Left;
  std::vector<std::vector<int>> blocks;    // region ids, ascending; blocks ordered by least member
  std::vector<std::pair<int, int>> order;  // (i, j): block i <= block j, i != j
  int margin = 0;
  bool heuristic = false;  // true when the region is a truncated ball

  nlohmann::json to_json(const Region& R) const;
};

// The preorders <=_L, <=_R, <=_LR on a region, from the c_s multiplication rules.
// For a truncated ball only elements of length <= radius - margin are reported.
class Cells {
public:
  Cells(const KLTable& kl, CellKind kind, int margin = 3, Mode mode = Mode::Parallel);

  CellKind kind() const { return kind_; }
  const Region& region() const { return kl_->region(); }
  // w' -> w edges meaning w appears in c_s c_{w'} (left) or c_{w'} c_s (right)
  const std::vector<std::vector<int>>& edges() const { return adj_; }
  // w <= w' in the chosen preorder
  bool leq(int w, int wp) const;
  bool equiv(int w, int wp) const { return comp_[w] == comp_[wp]; }
  int component(int w) const { return comp_[w]; }
  // elements of length <= trusted_radius are reported
  int trusted_radius() const { return trusted_; }
  bool trusted(int w) const { return region().length(w) <= trusted_; }
  // {w' : w <= w'}
  std::vector<int> upper_set(int w) const;

  CellPartition partition() const;

private:
  const KLTable* kl_;
  CellKind kind_;
  int margin_, trusted_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> comp_;                  // SCC id per element
  std::vector<std::vector<uint64_t>> reach_;  // per SCC: bitset of SCCs reachable (i.e. below)
};

// Edge generation only (left or right), used by Cells and by tests.
std::vector<std::vector<int>> cell_edges(const KLTable& kl, Side side, Mode mode);

}  // namespace wkl
