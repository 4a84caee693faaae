#pragma once

#include "wkl/afun.hpp"

namespace wkl {

enum class Status { Holds, Fails, NotApplicable };
std::string status_name(Status s);

struct ConjectureReport {
  std::string id;  // P1..P15, Ptilde, Q16c..Q16f, QA (a and Delta), QD (distinguished sets)
  Status status = Status::Holds;
  std::vector<nlohmann::json> witnesses;  // lexicographically least failing tuple first
  std::string region;
  std::string note;

  nlohmann::json to_json() const;
};

const std::vector<std::string>& property_ids();  // P1..P15, Ptilde

// Exhaustive check of one property over the trusted window of `an`.
ConjectureReport check(const std::string& id, const Analysis& an);
// All properties (or those in `only`), in the order of property_ids().
std::vector<ConjectureReport> check_all(const Analysis& an, const std::vector<std::string>& only = {});

// "consistent" unless P1-P3 and Ptilde hold while some of P4-P14 fails.
std::string meta_check(const std::vector<ConjectureReport>& reports);

// The two P15 implementations, exposed separately for the agreement test.
ConjectureReport check_p15_bivariate(const Analysis& an);
ConjectureReport check_p15_generators(const Analysis& an);

// Comparisons between a folded system and its split cover (both finite, whole-group
// analyses): Q16c..Q16f, QA, QD.
std::vector<ConjectureReport> quasisplit_compare(const Fold& f, const Analysis& folded, const Analysis& big);

}  // namespace wkl
