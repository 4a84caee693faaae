#pragma once

#include "wkl/dihedral_oracle.hpp"
#include "wkl/kl.hpp"

namespace wkl {

struct Discrepancy {
  std::string check;
  std::string input;
  std::string oracle;
  std::string generic;
};

struct OracleDiffReport {
  std::string system;
  int checks = 0;  // number of compared items
  std::map<std::string, int> per_check;
  std::vector<Discrepancy> diffs;

  nlohmann::json to_json() const;
};

// Compares the closed-form dihedral oracle with the generic engines on I2(m) (m = 0 for
// infinity; the window is used only then): c-basis, products, T-table, p_0, D_{s_1},
// a, Delta, the distinguished set, gamma triples, J and cells, wherever the oracle
// has a closed form.
OracleDiffReport oracle_diff(int m, int L1, int L2, int window = 12, int margin = 3, Mode mode = Mode::Parallel);

}  // namespace wkl
