#include "wkl/cells.hpp"

#include <algorithm>

namespace wkl {

std::string kind_name(CellKind k) {
  switch (k) {
    case CellKind::Left:
      return "left";
    case CellKind::Right:
      return "right";
    default:
      return "two-sided";
  }
}

CellKind parse_kind(const std::string& s) {
  if (s == "left" || s == "L") return CellKind::Left;
  if (s == "right" || s == "R") return CellKind::Right;
  if (s == "two-sided" || s == "twosided" || s == "LR") return CellKind::TwoSided;
  throw Error("UsageError", "unknown cell kind '" + s + "'");
}

std::vector<std::vector<int>> cell_edges(const KLTable& kl, Side side, Mode mode) {
  const Region& R = kl.region();
  R.system().require_positive_weights("cells");
  const int n = R.size(), r = R.system().rank();
  std::vector<std::vector<int>> adj(n);
  auto one = [&](int wp) {
    std::vector<int> out;
    for (int s = 0; s < r; ++s)
      for (auto& [z, c] : kl.cs_mul_c(s, wp, side, true)) out.push_back(z);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    adj[wp] = std::move(out);
  };
  if (mode == Mode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int wp = 0; wp < n; ++wp) one(wp);
  } else {
    for (int wp = 0; wp < n; ++wp) one(wp);
  }
  return adj;
}

namespace {

// Iterative Tarjan; components are numbered in completion order (sinks first).
std::vector<int> tarjan(const std::vector<std::vector<int>>& adj, int& ncomp) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on(n, 0);
  std::vector<std::pair<int, size_t>> call;
  int counter = 0;
  ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i == 0 && index[v] < 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on[v] = 1;
      }
      if (i < adj[v].size()) {
        int w = adj[v][i++];
        if (index[w] < 0)
          call.emplace_back(w, 0);
        else if (on[w])
          low[v] = std::min(low[v], index[w]);
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on[w] = 0;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

}  // namespace

Cells::Cells(const KLTable& kl, CellKind kind, int margin, Mode mode)
    : kl_(&kl), kind_(kind), margin_(margin) {
  const Region& R = kl.region();
  if (margin < 0) throw Error("UsageError", "margin must be >= 0");
  if (R.whole()) {
    trusted_ = R.radius();
  } else {
    if (margin > R.radius()) throw Error("RegionTooSmall", "margin exceeds the region radius");
    trusted_ = R.radius() - margin;
  }
  if (kind == CellKind::Left) {
    adj_ = cell_edges(kl, Side::Left, mode);
  } else if (kind == CellKind::Right) {
    adj_ = cell_edges(kl, Side::Right, mode);
  } else {
    adj_ = cell_edges(kl, Side::Left, mode);
    auto right = cell_edges(kl, Side::Right, mode);
    for (size_t i = 0; i < adj_.size(); ++i) {
      adj_[i].insert(adj_[i].end(), right[i].begin(), right[i].end());
      std::sort(adj_[i].begin(), adj_[i].end());
      adj_[i].erase(std::unique(adj_[i].begin(), adj_[i].end()), adj_[i].end());
    }
  }
  int nc = 0;
  comp_ = tarjan(adj_, nc);
  const size_t words = (nc + 63) / 64;
  reach_.assign(nc, std::vector<uint64_t>(words, 0));
  std::vector<std::vector<int>> members(nc);
  for (int v = 0; v < static_cast<int>(comp_.size()); ++v) members[comp_[v]].push_back(v);
  for (int c = 0; c < nc; ++c) {
    auto& bits = reach_[c];
    bits[c / 64] |= 1ull << (c % 64);
    for (int v : members[c])
      for (int w : adj_[v]) {
        int d = comp_[w];
        if (d == c) continue;
        for (size_t k = 0; k < words; ++k) bits[k] |= reach_[d][k];
      }
  }
}

bool Cells::leq(int w, int wp) const {
  int c = comp_[w];
  return reach_[comp_[wp]][c / 64] >> (c % 64) & 1;
}

std::vector<int> Cells::upper_set(int w) const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(comp_.size()); ++v)
    if (leq(w, v)) out.push_back(v);
  return out;
}

CellPartition Cells::partition() const {
  const Region& R = region();
  CellPartition P;
  P.kind = kind_;
  P.margin = R.whole() ? 0 : margin_;
  P.heuristic = !R.whole();
  std::map<int, std::vector<int>> by_comp;
  for (int v = 0; v < R.size(); ++v)
    if (trusted(v)) by_comp[comp_[v]].push_back(v);
  std::vector<int> comps;
  for (auto& [c, m] : by_comp) {
    P.blocks.push_back(m);
    comps.push_back(c);
  }
  std::vector<int> order(P.blocks.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return P.blocks[a][0] < P.blocks[b][0]; });
  std::vector<std::vector<int>> blocks;
  std::vector<int> cs;
  for (int i : order) {
    blocks.push_back(P.blocks[i]);
    cs.push_back(comps[i]);
  }
  P.blocks = std::move(blocks);
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = 0; j < cs.size(); ++j)
      if (i != j && (reach_[cs[j]][cs[i] / 64] >> (cs[i] % 64) & 1))
        P.order.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return P;
}

nlohmann::json CellPartition::to_json(const Region& R) const {
  nlohmann::json j;
  j["kind"] = kind_name(kind);
  nlohmann::json b = nlohmann::json::array();
  for (auto& blk : blocks) {
    nlohmann::json e = nlohmann::json::array();
    for (int v : blk) e.push_back(R.elt(v).str());
    b.push_back(e);
  }
  j["blocks"] = b;
  nlohmann::json o = nlohmann::json::array();
  for (auto& [a, c] : order) o.push_back({a, c});
  j["order"] = o;
  if (heuristic) {
    j["margin"] = margin;
    j["heuristic"] = true;
  }
  return j;
}

}  // namespace wkl
