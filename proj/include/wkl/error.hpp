#pragma once

#include <stdexcept>
#include <string>

namespace wkl {

// Every failure carries a stable name (e.g. "OddBondWeightMismatch") that the CLI
// prints verbatim.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

}  // namespace wkl
