#include "wkl/afun.hpp"

#include <climits>
#include <sstream>

namespace wkl {

bool AData::all_certified() const {
  for (int z = 0; z < trusted; ++z)
    if (!certified[z]) return false;
  return true;
}

long AData::gamma(int x, int y, int z) const {
  const Region& R = ht->kl().region();
  int zi = R.inverse(z);
  if (zi < 0 || !certified[zi])
    throw Error("UncertifiedRegion", "a(" + R.elt(zi < 0 ? z : zi).str() + ") is not certified");
  auto it = gamma_table.find({x, y, z});
  return it == gamma_table.end() ? 0 : it->second;
}

std::vector<int> AData::dset() const {
  const Region& R = ht->kl().region();
  std::vector<int> out;
  for (int z = 0; z < trusted; ++z) {
    if (!certified[z])
      throw Error("UncertifiedRegion", "a(" + R.elt(z).str() + ") is only a window lower bound");
    if (a[z] == delta[z]) out.push_back(z);
  }
  return out;
}

void AData::write_csv(std::ostream& os, const Region& R) const {
  os << "z,a,certified,delta,n\n";
  for (int z = 0; z < trusted; ++z)
    os << R.elt(z).str() << ',' << a[z] << ',' << (certified[z] ? "true" : "false") << ',' << delta[z]
       << ',' << n[z] << '\n';
}

void AData::write_gamma_csv(std::ostream& os, const Region& R) const {
  os << "x,y,z,gamma\n";
  for (auto& [k, g] : gamma_table) {
    auto [x, y, z] = k;
    if (x < trusted && y < trusted && z < trusted)
      os << R.elt(x).str() << ',' << R.elt(y).str() << ',' << R.elt(z).str() << ',' << g << '\n';
  }
}

AData build_adata(const HTable& ht, const Cells* two_sided, int trusted_radius) {
  const KLTable& kl = ht.kl();
  const Region& R = kl.region();
  const CoxeterSystem& W = R.system();
  W.require_positive_weights("afun");
  AData d;
  d.ht = &ht;
  d.nd = ht.domain_size();
  d.finite = R.whole();
  d.trusted = d.finite ? d.nd : std::min(d.nd, R.count_upto(trusted_radius));
  d.bound = d.finite ? R.weight(R.longest()) : W.conjectural_bound();
  const int n = R.size();
  d.a.assign(n, INT_MIN);
  for (int x = 0; x < d.nd; ++x)
    for (int y = 0; y < d.nd; ++y)
      for (auto& [z, h] : ht.h(x, y)) d.a[z] = std::max(d.a[z], h.max_exp());
  d.certified.assign(n, 0);
  d.cert_reason.assign(n, "");
  for (int z = 0; z < n; ++z) {
    if (d.finite) {
      d.certified[z] = 1;
      d.cert_reason[z] = "finite";
    } else if (z == 0) {
      d.certified[z] = 1;
      d.cert_reason[z] = "identity";
    } else if (d.a[z] == d.bound) {
      d.certified[z] = 1;
      d.cert_reason[z] = "bound";
    } else if (two_sided && z < d.nd) {
      bool ok = true;
      for (int w : two_sided->upper_set(z))
        if (w >= d.nd || !two_sided->trusted(w)) ok = false;
      if (ok) {
        d.certified[z] = 1;
        d.cert_reason[z] = "upper-closure";
      }
    }
  }
  d.delta.assign(n, 0);
  d.n.assign(n, 0);
  for (int z = 0; z < n; ++z) {
    const Laurent& p = kl.p(0, z);
    d.delta[z] = -p.max_exp();
    d.n[z] = p.coeff(p.max_exp()).convert_to<long>();
  }
  for (int x = 0; x < d.nd; ++x)
    for (int y = 0; y < d.nd; ++y)
      for (auto& [z, h] : ht.h(x, y)) {
        if (!d.certified[z]) continue;
        Int c = h.coeff(d.a[z]);
        if (c != 0) d.gamma_table[{x, y, R.inverse(z)}] = c.convert_to<long>();
      }
  return d;
}

std::unique_ptr<Analysis> Analysis::build(SystemPtr W, int radius, int margin, Mode mode,
                                          const std::string& cache_dir) {
  W->require_positive_weights("afun");
  auto A = std::make_unique<Analysis>();
  A->W = W;
  A->radius = radius;
  A->margin = radius < 0 ? 0 : margin;
  A->mode = mode;
  if (radius < 0) {
    A->region = std::make_shared<Region>(W, -1);
  } else {
    if (margin > radius) throw Error("RegionTooSmall", "margin exceeds the window radius");
    A->region = std::make_shared<Region>(W, 2 * radius);
  }
  A->kl = std::make_unique<KLTable>(A->region, mode, cache_dir);
  A->ht = std::make_unique<HTable>(*A->kl, radius < 0 ? A->region->radius() : radius, mode);
  A->left = std::make_unique<Cells>(*A->kl, CellKind::Left, A->margin, mode);
  A->right = std::make_unique<Cells>(*A->kl, CellKind::Right, A->margin, mode);
  A->two = std::make_unique<Cells>(*A->kl, CellKind::TwoSided, A->margin, mode);
  int trusted = radius < 0 ? A->region->radius() : radius - margin;
  A->ad = std::make_unique<AData>(build_adata(*A->ht, A->two.get(), trusted));
  return A;
}

std::string Analysis::describe() const {
  std::ostringstream os;
  os << W->describe();
  if (radius < 0)
    os << " region=W (" << region->size() << " elements)";
  else
    os << " window: h-domain l<=" << radius << ", quantifiers l<=" << radius - margin
       << ", KL region l<=" << region->radius();
  return os.str();
}

}  // namespace wkl
