#include "wkl/rings.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace wkl {

Laurent::Laurent(long c) {
  if (c != 0) t_.emplace_back(0, Int(c));
}

Laurent Laurent::monomial(int e, const Int& c) {
  Laurent r;
  if (c != 0) r.t_.emplace_back(e, c);
  return r;
}

Laurent Laurent::sym(int e) {
  if (e == 0) return Laurent(2);
  return monomial(e) + monomial(-e);
}

Laurent Laurent::antisym(int e) { return monomial(e) - monomial(-e); }

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::map<int, Int> acc;
  for (auto& [e, c] : terms) acc[e] += c;
  Laurent r;
  for (auto& [e, c] : acc)
    if (c != 0) r.t_.emplace_back(e, c);
  return r;
}

Int Laurent::coeff(int n) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), n,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != t_.end() && it->first == n) return it->second;
  return 0;
}

std::optional<std::pair<int, int>> Laurent::degree_window() const {
  if (t_.empty()) return std::nullopt;
  return std::make_pair(t_.front().first, t_.back().first);
}

Laurent Laurent::bar() const {
  Laurent r;
  r.t_.reserve(t_.size());
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) r.t_.emplace_back(-it->first, it->second);
  return r;
}

Laurent Laurent::truncate(int lo, int hi) const {
  Laurent r;
  for (auto& t : t_)
    if (t.first >= lo && t.first <= hi) r.t_.push_back(t);
  return r;
}

Laurent Laurent::shift(int k) const {
  Laurent r = *this;
  for (auto& t : r.t_) t.first += k;
  return r;
}

Int Laurent::at_one() const {
  Int s = 0;
  for (auto& t : t_) s += t.second;
  return s;
}

bool Laurent::nonneg_coeffs() const {
  for (auto& t : t_)
    if (t.second < 0) return false;
  return true;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
      out.push_back(std::move(t_[i++]));
    } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
      out.push_back(o.t_[j++]);
    } else {
      Int c = t_[i].second + o.t_[j].second;
      if (c != 0) out.emplace_back(t_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  t_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

Laurent& Laurent::operator*=(const Int& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& t : t_) t.second *= c;
  return *this;
}

void Laurent::axpy(const Laurent& a, const Laurent& b, bool negate) {
  if (a.t_.empty() || b.t_.empty()) return;
  int lo = a.min_exp() + b.min_exp();
  int hi = a.max_exp() + b.max_exp();
  if (!t_.empty()) {
    lo = std::min(lo, min_exp());
    hi = std::max(hi, max_exp());
  }
  std::vector<Int> dense(hi - lo + 1);
  for (auto& t : t_) dense[t.first - lo] = std::move(t.second);
  for (auto& x : a.t_)
    for (auto& y : b.t_) {
      if (negate)
        dense[x.first + y.first - lo] -= x.second * y.second;
      else
        dense[x.first + y.first - lo] += x.second * y.second;
    }
  t_.clear();
  for (int k = 0; k <= hi - lo; ++k)
    if (dense[k] != 0) t_.emplace_back(k + lo, std::move(dense[k]));
}

void Laurent::add_mul(const Laurent& a, const Laurent& b) { axpy(a, b, false); }
void Laurent::sub_mul(const Laurent& a, const Laurent& b) { axpy(a, b, true); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  r.add_mul(a, b);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : t_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::string Laurent::tex() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : t_) {
    Int mag = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << "v";
    if (e != 1) os << "^{" << e << "}";
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_end() {
    skip();
    return i >= s.size();
  }
  std::string digits() {
    skip();
    size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(st, i - st);
  }
  [[noreturn]] void fail() const {
    throw std::invalid_argument("bad Laurent polynomial text: '" + s + "'");
  }
};

}  // namespace

Laurent Laurent::parse(const std::string& text) {
  Cursor c{text};
  std::vector<Term> terms;
  if (c.at_end()) c.fail();
  bool first = true;
  while (!c.at_end()) {
    int sign = 1;
    if (c.eat('-'))
      sign = -1;
    else if (!c.eat('+') && !first)
      c.fail();
    first = false;
    Int coef = 1;
    std::string d = c.digits();
    bool have_coef = !d.empty();
    if (have_coef) coef = Int(d);
    int e = 0;
    bool star = c.eat('*');
    if (c.eat('v')) {
      e = 1;
      if (c.eat('^')) {
        int es = 1;
        if (c.eat('-')) es = -1;
        bool paren = c.eat('{');
        std::string ed = c.digits();
        if (ed.empty()) c.fail();
        if (paren && !c.eat('}')) c.fail();
        e = es * std::stoi(ed);
      }
    } else if (star || !have_coef) {
      c.fail();
    }
    terms.emplace_back(e, sign * coef);
  }
  return from_terms(std::move(terms));
}

nlohmann::json Laurent::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (auto& [e, c] : t_) j.push_back({e, c.str()});
  return j;
}

Laurent Laurent::from_json(const nlohmann::json& j) {
  std::vector<Term> terms;
  for (auto& p : j) terms.emplace_back(p.at(0).get<int>(), Int(p.at(1).get<std::string>()));
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.str(); }

// ---- BiLaurent ----

void BiLaurent::add_term(const Key& k, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BiLaurent BiLaurent::lift(const Laurent& a, Var var) {
  BiLaurent r;
  for (auto& [e, c] : a.terms())
    r.add_term(var == Var::V ? Key{e, 0} : Key{0, e}, c);
  return r;
}

BiLaurent BiLaurent::outer(const Laurent& a, const Laurent& b) {
  BiLaurent r;
  r.add_outer(a, b);
  return r;
}

void BiLaurent::add_outer(const Laurent& a, const Laurent& b) {
  for (auto& [ea, ca] : a.terms())
    for (auto& [eb, cb] : b.terms()) add_term({ea, eb}, ca * cb);
}

Int BiLaurent::coeff(int ev, int evp) const {
  auto it = t_.find({ev, evp});
  return it == t_.end() ? Int(0) : it->second;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  for (auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  BiLaurent r;
  for (auto& [ka, ca] : a.t_)
    for (auto& [kb, cb] : b.t_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

Laurent BiLaurent::specialize() const {
  std::vector<Laurent::Term> terms;
  for (auto& [k, c] : t_) terms.emplace_back(k.first + k.second, c);
  return Laurent::from_terms(std::move(terms));
}

std::string BiLaurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*v^" << k.first << "*v'^" << k.second;
  }
  return os.str();
}

}  // namespace wkl
