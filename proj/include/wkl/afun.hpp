#pragma once

#include "wkl/cells.hpp"

#include <map>
#include <memory>
#include <tuple>

namespace wkl {

// a(z), Delta(z), n_z, gamma and the candidate distinguished set, read off an h-table.
// a(z) is the maximum over x, y in the h-domain, stored for every z of the KL region;
// it is exact where `certified` is set and a lower bound elsewhere.
struct AData {
  const HTable* ht = nullptr;
  int nd = 0;       // domain size
  int trusted = 0;  // ids < trusted form the quantifier range
  int bound = 0;    // N
  bool finite = false;
  std::vector<int> a;
  std::vector<char> certified;
  std::vector<std::string> cert_reason;
  std::vector<int> delta;
  std::vector<long> n;
  std::map<std::tuple<int, int, int>, long> gamma_table;  // nonzero gamma_{x,y,z}

  bool all_certified() const;
  // gamma_{x,y,z} = coeff of v^{a(z^-1)} in h_{x,y,z^-1}
  long gamma(int x, int y, int z) const;
  std::vector<int> dset() const;
  void write_csv(std::ostream& os, const Region& R) const;
  void write_gamma_csv(std::ostream& os, const Region& R) const;
};

// Everything derived from one weighted system on one window.
// radius < 0: finite W, all tables on the whole group.
// Otherwise: KL region = ball(2 radius), h-domain = ball(radius), quantifiers over
// ball(radius - margin).
struct Analysis {
  SystemPtr W;
  int radius = -1;
  int margin = 0;
  Mode mode = Mode::Parallel;
  RegionPtr region;
  std::unique_ptr<KLTable> kl;
  std::unique_ptr<HTable> ht;
  std::unique_ptr<Cells> left, right, two;
  std::unique_ptr<AData> ad;

  static std::unique_ptr<Analysis> build(SystemPtr W, int radius = -1, int margin = 3,
                                         Mode mode = Mode::Parallel, const std::string& cache_dir = "");
  const Region& R() const { return *region; }
  int domain_size() const { return ht->domain_size(); }
  int trusted_size() const { return ad->trusted; }
  std::string describe() const;
};

AData build_adata(const HTable& ht, const Cells* two_sided, int trusted_radius);

}  // namespace wkl
