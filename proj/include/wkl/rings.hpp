#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wkl {

using Int = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in v over arbitrary-precision integers.
// Terms are kept sorted by exponent with no zero coefficients.
class Laurent {
public:
  using Term = std::pair<int, Int>;

  Laurent() = default;
  Laurent(long c);  // constant; implicit so that 0 and 1 read naturally
  static Laurent monomial(int e, const Int& c = 1);
  static Laurent v(int e) { return monomial(e, 1); }
  // v^e + v^-e
  static Laurent sym(int e);
  // v^e - v^-e
  static Laurent antisym(int e);
  static Laurent from_terms(std::vector<Term> terms);

  bool is_zero() const { return t_.empty(); }
  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }

  Int coeff(int n) const;
  std::optional<std::pair<int, int>> degree_window() const;
  int min_exp() const { return t_.front().first; }
  int max_exp() const { return t_.back().first; }
  bool is_monomial() const { return t_.size() == 1; }

  Laurent bar() const;
  // terms with lo <= e <= hi
  Laurent truncate(int lo, int hi) const;
  Laurent shift(int k) const;
  Int at_one() const;
  bool in_negative_part() const { return is_zero() || max_exp() < 0; }
  bool nonneg_coeffs() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent& operator*=(const Int& c);
  // this += a * b without a temporary product
  void add_mul(const Laurent& a, const Laurent& b);
  void sub_mul(const Laurent& a, const Laurent& b);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator*(Laurent a, const Int& c) { return a *= c; }
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return t_ == o.t_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  std::string str() const;
  // v-notation for TeX export
  std::string tex() const;
  static Laurent parse(const std::string& s);
  nlohmann::json to_json() const;
  static Laurent from_json(const nlohmann::json& j);

private:
  void axpy(const Laurent& a, const Laurent& b, bool negate);
  std::vector<Term> t_;
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

// Sparse Laurent polynomial in two variables v, v'.
class BiLaurent {
public:
  enum class Var { V, VPrime };
  using Key = std::pair<int, int>;

  BiLaurent() = default;
  static BiLaurent lift(const Laurent& a, Var var);
  // a(v) * b(v')
  static BiLaurent outer(const Laurent& a, const Laurent& b);

  bool is_zero() const { return t_.empty(); }
  const std::map<Key, Int>& terms() const { return t_; }
  Int coeff(int ev, int evp) const;

  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  // this += a(v) * b(v')
  void add_outer(const Laurent& a, const Laurent& b);
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  bool operator==(const BiLaurent& o) const { return t_ == o.t_; }

  // substitute v' := v
  Laurent specialize() const;
  std::string str() const;

private:
  void add_term(const Key& k, const Int& c);
  std::map<Key, Int> t_;
};

}  // namespace wkl
