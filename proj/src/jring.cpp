#include "wkl/jring.hpp"

namespace wkl {

JTable::JTable(const Analysis& an) : an_(&an) {
  const AData& ad = *an.ad;
  const Region& R = an.R();
  range_ = ad.trusted;
  dset_ = ad.dset();
  const int n = R.size();
  nhat_.assign(n, 0);
  for (int z = 0; z < n; ++z) {
    int zi = R.inverse(z);
    if (!an.left->trusted(zi)) continue;
    int found = 0;
    for (int d : dset_)
      if (an.left->equiv(d, zi)) {
        if (found) throw Error("NhatNotUnique", "two distinguished elements in the left cell of " + R.elt(zi).str());
        found = 1;
        nhat_[z] = static_cast<int>(ad.n[d]);
      }
  }
  prod_.assign(static_cast<size_t>(range_) * range_, JZ());
  std::vector<char> undetermined(prod_.size(), 0);
  for (int x = 0; x < range_; ++x)
    for (int y = 0; y < range_; ++y) {
      JZ& out = prod_[static_cast<size_t>(x) * range_ + y];
      for (auto& [z, h] : an.ht->h(x, y)) {
        if (ad.certified[z]) {
          out.add(z, h.coeff(ad.a[z]).convert_to<long>());
        } else if (h.max_exp() >= ad.a[z]) {
          // a(z) is only bounded below here, so gamma cannot be read off
          out.terms.clear();
          out.terms.emplace(-1, 1);
          break;
        }
      }
    }
}

long JTable::n_hat(int z) const {
  if (nhat_[z] == 0)
    throw Error("UncertifiedRegion", "no distinguished element found for the left cell of z^-1");
  return nhat_[z];
}

const JZ& JTable::product(int x, int y) const {
  if (x >= range_ || y >= range_) throw Error("UncertifiedRegion", "factor outside the trusted window");
  const JZ& p = prod_[static_cast<size_t>(x) * range_ + y];
  if (p.terms.count(-1))
    throw Error("UncertifiedRegion", "gamma for t_x t_y depends on an uncertified a-value");
  return p;
}

JZ JTable::mul(const JZ& a, const JZ& b) const {
  JZ r;
  for (auto& [x, cx] : a.terms)
    for (auto& [y, cy] : b.terms)
      for (auto& [z, c] : product(x, y).terms) r.add(z, cx * cy * c);
  return r;
}

JA JTable::mul(const JA& a, const JA& b) const {
  JA r;
  for (auto& [x, cx] : a.terms)
    for (auto& [y, cy] : b.terms) {
      Laurent xy = cx * cy;
      for (auto& [z, c] : product(x, y).terms) r.add(z, xy * Int(c));
    }
  return r;
}

JZ JTable::unit() const {
  JZ u;
  for (int d : dset_) u.add(d, an_->ad->n[d]);
  return u;
}

JA JTable::phi_dagger(int x) const {
  const AData& ad = *an_->ad;
  JA r;
  for (int d : dset_)
    for (auto& [z, h] : an_->ht->h(x, d)) {
      if (!ad.certified[z]) {
        if (ad.a[z] > ad.a[d]) continue;
        throw Error("UncertifiedRegion", "phi needs a(z) for an uncertified z");
      }
      if (ad.a[z] != ad.a[d]) continue;
      r.add(z, h * Int(n_hat(z)));
    }
  return r;
}

std::vector<JTable::Block> JTable::decomposition() const {
  const Cells& two = *an_->two;
  std::map<int, std::vector<int>> by;
  for (int z = 0; z < range_; ++z) by[two.component(z)].push_back(z);
  std::vector<Block> out;
  for (auto& [c, m] : by) {
    Block b;
    b.members = m;
    for (int d : dset_)
      if (two.component(d) == c) b.unit.add(d, an_->ad->n[d]);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.members[0] < b.members[0]; });
  for (int x = 0; x < range_; ++x)
    for (int y = 0; y < range_; ++y)
      if (two.component(x) != two.component(y) && !product(x, y).is_zero())
        throw Error("DecompositionFailed", "t_x t_y != 0 across two-sided cells");
  return out;
}

nlohmann::json JTable::to_json() const {
  const Region& R = an_->R();
  nlohmann::json j;
  j["region"] = an_->describe();
  nlohmann::json u = nlohmann::json::array();
  for (int d : dset_) u.push_back({R.elt(d).str(), an_->ad->n[d]});
  j["unit"] = u;
  nlohmann::json p = nlohmann::json::object();
  for (int x = 0; x < range_; ++x)
    for (int y = 0; y < range_; ++y) {
      const JZ& t = prod_[static_cast<size_t>(x) * range_ + y];
      if (t.is_zero() || t.terms.count(-1)) continue;
      nlohmann::json e = nlohmann::json::array();
      for (auto& [z, c] : t.terms) e.push_back({R.elt(z).str(), c});
      p[R.elt(x).str() + "|" + R.elt(y).str()] = e;
    }
  j["products"] = p;
  return j;
}

}  // namespace wkl
