#include "wkl/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace wkl {

void CoxeterMatrix::validate() const {
  if (n < 1 || n > 30) throw Error("InvalidMatrix", "rank must be in [1,30]");
  if (static_cast<int>(m.size()) != n * n) throw Error("InvalidMatrix", "wrong entry count");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = at(i, j);
      if (i == j && v != 1) throw Error("InvalidMatrix", "m(s,s) must be 1");
      if (i != j && v != kInf && v < 2) throw Error("InvalidMatrix", "m(s,t) must be >= 2");
      if (v != at(j, i)) throw Error("InvalidMatrix", "matrix not symmetric");
    }
}

CoxeterMatrix CoxeterMatrix::restrict_to(const std::vector<int>& gens) const {
  CoxeterMatrix r(static_cast<int>(gens.size()));
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) r.at(i, j) = at(gens[i], gens[j]);
  return r;
}

std::string Element::str() const {
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(w[i] + 1);
  }
  return s;
}

Element Element::parse(const std::string& s) {
  Element e;
  if (s.empty() || s == "e" || s == "id") return e;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    int g = 0;
    try {
      g = std::stoi(tok);
    } catch (...) {
      throw Error("ParseError", "bad element '" + s + "'");
    }
    if (g < 1 || g > 255) throw Error("ParseError", "bad generator in '" + s + "'");
    e.w.push_back(static_cast<uint8_t>(g - 1));
  }
  return e;
}

size_t WordHash::operator()(const Word& w) const {
  size_t h = 1469598103934665603ull;
  for (uint8_t c : w) h = (h ^ c) * 1099511628211ull;
  return h ^ w.size();
}
size_t ElementHash::operator()(const Element& e) const { return WordHash{}(e.w); }

// ---- generic engine: braid-move closure ----

namespace {

class GenericEngine : public Engine {
public:
  explicit GenericEngine(CoxeterMatrix m) : m_(std::move(m)) {}
  std::string name() const override { return "generic-tits"; }

  Word normalize(const Word& w) const override {
    {
      std::shared_lock lk(mu_);
      auto it = memo_.find(w);
      if (it != memo_.end()) return it->second;
    }
    Word r = compute(w);
    std::unique_lock lk(mu_);
    memo_.emplace(w, r);
    return r;
  }

  std::pair<Word, int> mul_gen(const Word& w, int s, Side side) const override {
    Word x = w;
    if (side == Side::Left)
      x.insert(x.begin(), static_cast<uint8_t>(s));
    else
      x.push_back(static_cast<uint8_t>(s));
    Word r = normalize(x);
    return {r, r.size() > w.size() ? 1 : -1};
  }

private:
  // Either finds a word with an adjacent "ss" (returns false with the shortened word in
  // `out`) or returns the ShortLex-least word of the braid class.
  bool closure(const Word& start, Word& out) const {
    std::unordered_set<Word, WordHash> seen{start};
    std::deque<Word> q{start};
    Word best = start;
    while (!q.empty()) {
      Word x = std::move(q.front());
      q.pop_front();
      for (size_t i = 0; i + 1 < x.size(); ++i)
        if (x[i] == x[i + 1]) {
          out = x;
          out.erase(out.begin() + i, out.begin() + i + 2);
          return false;
        }
      if (x < best) best = x;
      for (size_t i = 0; i + 1 < x.size(); ++i) {
        int a = x[i], b = x[i + 1];
        int mab = m_.at(a, b);
        if (mab == kInf || i + mab > x.size()) continue;
        bool alt = true;
        for (int k = 0; k < mab && alt; ++k) alt = x[i + k] == (k % 2 ? b : a);
        if (!alt) continue;
        Word y = x;
        for (int k = 0; k < mab; ++k) y[i + k] = static_cast<uint8_t>(k % 2 ? a : b);
        if (seen.insert(y).second) q.push_back(std::move(y));
      }
    }
    out = best;
    return true;
  }

  Word compute(Word w) const {
    // Reduce a prefix at a time so that every closure starts from a short word.
    Word cur;
    for (uint8_t s : w) {
      cur.push_back(s);
      Word out;
      while (!closure(cur, out)) cur = out;
      cur = out;
    }
    return cur;
  }

  CoxeterMatrix m_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Word, Word, WordHash> memo_;
};

// Alternating words; (a, k) is the word of length k starting with generator a.
class DihedralEngine : public Engine {
public:
  explicit DihedralEngine(int m) : m_(m) {}
  std::string name() const override { return "dihedral"; }

  Word make(int a, int k) const {
    if (m_ != kInf && k == m_) a = 0;
    Word w(k);
    for (int i = 0; i < k; ++i) w[i] = static_cast<uint8_t>(i % 2 ? 1 - a : a);
    return w;
  }

  Word normalize(const Word& w) const override {
    Word cur;
    for (uint8_t s : w) cur = mul_gen(cur, s, Side::Right).first;
    return cur;
  }

  std::pair<Word, int> mul_gen(const Word& w, int s, Side side) const override {
    int k = static_cast<int>(w.size());
    if (k == 0) return {Word{static_cast<uint8_t>(s)}, 1};
    int a = w[0];
    bool top = m_ != kInf && k == m_;
    if (side == Side::Left) {
      if (top) return {make(1 - s, k - 1), -1};
      if (s == a) return {make(1 - a, k - 1), -1};
      return {make(s, k + 1), 1};
    }
    int b = k % 2 ? a : 1 - a;
    if (top) return {make(m_ % 2 ? s : 1 - s, k - 1), -1};
    if (s == b) return {make(a, k - 1), -1};
    return {make(a, k + 1), 1};
  }

private:
  int m_;
};

}  // namespace

std::unique_ptr<Engine> make_generic_engine(const CoxeterMatrix& m) {
  return std::make_unique<GenericEngine>(m);
}
std::unique_ptr<Engine> make_dihedral_engine(int m) { return std::make_unique<DihedralEngine>(m); }

// ---- CoxeterSystem ----

std::shared_ptr<CoxeterSystem> CoxeterSystem::make(CoxeterMatrix m, std::vector<int> weights,
                                                   EngineKind kind) {
  m.validate();
  if (static_cast<int>(weights.size()) != m.n)
    throw Error("InvalidWeights", "need one weight per generator");
  for (int i = 0; i < m.n; ++i)
    if (weights[i] < 0)
      throw Error("NegativeWeight", "L(s" + std::to_string(i + 1) + ") < 0 is not supported");
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      int v = m.at(i, j);
      if (v != kInf && v % 2 == 1 && weights[i] != weights[j])
        throw Error("OddBondWeightMismatch",
                    "m(s" + std::to_string(i + 1) + ",s" + std::to_string(j + 1) +
                        ") is odd but the weights differ");
    }
  std::shared_ptr<CoxeterSystem> W(new CoxeterSystem());
  W->mat_ = m;
  W->L_ = std::move(weights);
  switch (kind) {
    case EngineKind::Auto:
      W->eng_ = m.n == 2 ? make_dihedral_engine(m.at(0, 1)) : make_generic_engine(m);
      break;
    case EngineKind::GenericTits:
      W->eng_ = make_generic_engine(m);
      break;
    case EngineKind::Dihedral:
      if (m.n != 2) throw Error("InvalidEngine", "dihedral engine needs rank 2");
      W->eng_ = make_dihedral_engine(m.at(0, 1));
      break;
    case EngineKind::AffinePermA: {
      int n = m.n;
      CoxeterMatrix ref(n);
      for (int i = 0; i < n; ++i)
        if (n == 2)
          ref.set(0, 1, kInf);
        else
          ref.set(i, (i + 1) % n, 3);
      if (ref.m != m.m) throw Error("InvalidEngine", "matrix is not of affine type A");
      W->eng_ = make_affine_a_engine(n);
      break;
    }
    case EngineKind::AffinePermC: {
      int p = m.n - 1;
      if (p < 2) throw Error("InvalidEngine", "affine type C needs p >= 2");
      CoxeterMatrix ref(p + 1);
      for (int i = 0; i < p; ++i) ref.set(i, i + 1, (i == 0 || i == p - 1) ? 4 : 3);
      if (ref.m != m.m) throw Error("InvalidEngine", "matrix is not of affine type C");
      W->eng_ = make_affine_c_engine(p);
      break;
    }
  }
  return W;
}

void CoxeterSystem::require_positive_weights(const std::string& who) const {
  for (int i = 0; i < rank(); ++i)
    if (L_[i] <= 0)
      throw Error("NonPositiveWeight", who + " requires L(s) > 0 but L(s" + std::to_string(i + 1) +
                                           ") = " + std::to_string(L_[i]));
}

bool CoxeterSystem::positive_weights() const {
  return std::all_of(L_.begin(), L_.end(), [](int x) { return x > 0; });
}

Element CoxeterSystem::parse(const std::string& s) const {
  Element e = Element::parse(s);
  for (uint8_t g : e.w)
    if (g >= rank()) throw Error("ParseError", "generator out of range in '" + s + "'");
  return from_word(e.w);
}

std::pair<Element, int> CoxeterSystem::mul_gen(const Element& w, int s, Side side) const {
  int idx = side == Side::Left ? 0 : 1;
  Word key = w.w;
  key.push_back(static_cast<uint8_t>(s));
  {
    std::shared_lock lk(mu_);
    auto it = mul_cache_[idx].find(key);
    if (it != mul_cache_[idx].end())
      return {Element{it->second}, it->second.size() > w.w.size() ? 1 : -1};
  }
  auto [r, d] = eng_->mul_gen(w.w, s, side);
  std::unique_lock lk(mu_);
  mul_cache_[idx].emplace(std::move(key), r);
  return {Element{std::move(r)}, d};
}

Element CoxeterSystem::mul(const Element& a, const Element& b) const {
  Element r = a;
  for (uint8_t s : b.w) r = mul_gen(r, s, Side::Right).first;
  return r;
}

Element CoxeterSystem::inverse(const Element& a) const {
  Element r;
  for (auto it = a.w.rbegin(); it != a.w.rend(); ++it) r = mul_gen(r, *it, Side::Right).first;
  return r;
}

int CoxeterSystem::weight(const Element& a) const {
  int s = 0;
  for (uint8_t g : a.w) s += L_[g];
  return s;
}

bool CoxeterSystem::is_descent(const Element& a, int s, Side side) const {
  if (side == Side::Left && !a.w.empty() && a.w[0] == s) return true;
  return mul_gen(a, s, side).second < 0;
}

GenSet CoxeterSystem::descents(const Element& a, Side side) const {
  GenSet d = 0;
  for (int s = 0; s < rank(); ++s)
    if (is_descent(a, s, side)) d |= 1u << s;
  return d;
}

bool CoxeterSystem::bruhat_leq(const Element& y, const Element& w) const {
  if (y.length() > w.length()) return false;
  if (y.length() == w.length()) return y == w;
  if (y.is_identity()) return true;
  auto key = std::make_pair(y.w, w.w);
  {
    std::shared_lock lk(mu_);
    auto it = bruhat_cache_.find(key);
    if (it != bruhat_cache_.end()) return it->second;
  }
  int s = w.w[0];  // a left descent of w
  Element sw = mul_gen(w, s, Side::Left).first;
  auto [sy, d] = mul_gen(y, s, Side::Left);
  bool r = d < 0 ? bruhat_leq(sy, sw) : bruhat_leq(y, sw);
  std::unique_lock lk(mu_);
  bruhat_cache_.emplace(std::move(key), r);
  return r;
}

std::vector<Element> CoxeterSystem::enumerate(int max_length) const {
  std::vector<Element> all{identity()};
  std::vector<Element> layer{identity()};
  for (int k = 1; k <= max_length && !layer.empty(); ++k) {
    std::set<Element> next;
    for (auto& w : layer)
      for (int s = 0; s < rank(); ++s) {
        auto [ws, d] = mul_gen(w, s, Side::Right);
        if (d > 0) next.insert(ws);
      }
    layer.assign(next.begin(), next.end());
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

std::vector<Element> CoxeterSystem::bruhat_interval(const Element& y, const Element& w) const {
  std::vector<Element> out;
  for (auto& z : enumerate(w.length()))
    if (bruhat_leq(y, z) && bruhat_leq(z, w)) out.push_back(z);
  return out;
}

bool CoxeterSystem::parabolic_finite(GenSet I) const {
  std::vector<int> g;
  for (int s = 0; s < rank(); ++s)
    if (I >> s & 1) g.push_back(s);
  const int k = static_cast<int>(g.size());
  if (k == 0) return true;
  // positive definiteness of B(s,t) = -cos(pi/m) via Cholesky
  std::vector<long double> a(k * k);
  const long double pi = std::acos(-1.0L);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int v = m(g[i], g[j]);
      if (v == kInf) return false;
      a[i * k + j] = -std::cos(pi / v);
    }
  for (int j = 0; j < k; ++j) {
    long double d = a[j * k + j];
    for (int t = 0; t < j; ++t) d -= a[j * k + t] * a[j * k + t];
    if (d <= 1e-12L) return false;
    d = std::sqrt(d);
    a[j * k + j] = d;
    for (int i = j + 1; i < k; ++i) {
      long double x = a[i * k + j];
      for (int t = 0; t < j; ++t) x -= a[i * k + t] * a[j * k + t];
      a[i * k + j] = x / d;
    }
  }
  return true;
}

Element CoxeterSystem::longest_element(GenSet I) const {
  if (!parabolic_finite(I)) throw Error("InfiniteParabolic", "W_I is infinite");
  Element w;
  for (bool grew = true; grew;) {
    grew = false;
    for (int s = 0; s < rank(); ++s) {
      if (!(I >> s & 1)) continue;
      auto [sw, d] = mul_gen(w, s, Side::Left);
      if (d > 0) {
        w = sw;
        grew = true;
        break;
      }
    }
  }
  return w;
}

Element CoxeterSystem::min_coset_rep(GenSet I, const Element& w, Side side) const {
  Element r = w;
  for (bool shrank = true; shrank;) {
    shrank = false;
    for (int s = 0; s < rank(); ++s) {
      if (!(I >> s & 1)) continue;
      auto [x, d] = mul_gen(r, s, side);
      if (d < 0) {
        r = x;
        shrank = true;
        break;
      }
    }
  }
  return r;
}

int CoxeterSystem::conjectural_bound() const {
  int best = 0;
  for (GenSet I = 0; I <= all_gens(); ++I) {
    if (parabolic_finite(I)) best = std::max(best, weight(longest_element(I)));
    if (I == all_gens()) break;
  }
  return best;
}

std::string CoxeterSystem::describe() const {
  std::ostringstream os;
  os << "rank " << rank() << " [";
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) {
      if (i || j > 1) os << ' ';
      os << "m" << i + 1 << j + 1 << '=' << (m(i, j) == kInf ? std::string("inf") : std::to_string(m(i, j)));
    }
  os << "] L=(";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << L_[i];
  os << ") engine=" << engine_name();
  return os.str();
}

std::string CoxeterSystem::hash() const {
  std::string t = system_to_text(*this);
  uint64_t h = 1469598103934665603ull;
  for (char c : t) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ---- configs and presets ----

SystemPtr parse_system(const std::string& text, EngineKind kind) {
  std::istringstream is(text);
  std::vector<std::string> tok;
  std::string t;
  while (is >> t) {
    if (t[0] == '#') {
      std::getline(is, t);
      continue;
    }
    tok.push_back(t);
  }
  size_t p = 0;
  auto next_int = [&](bool allow_inf) {
    if (p >= tok.size()) throw Error("ParseError", "system config truncated");
    const std::string& s = tok[p++];
    if (allow_inf && (s == "inf" || s == "oo")) return kInf;
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw 0;
      return v;
    } catch (...) {
      throw Error("ParseError", "bad integer '" + s + "' in system config");
    }
  };
  int n = next_int(false);
  if (n < 1 || n > 30) throw Error("ParseError", "bad rank");
  CoxeterMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = next_int(true);
  std::vector<int> L(n);
  for (int i = 0; i < n; ++i) L[i] = next_int(false);
  if (p != tok.size()) throw Error("ParseError", "trailing tokens in system config");
  return CoxeterSystem::make(m, L, kind);
}

SystemPtr load_system(const std::string& path, EngineKind kind) {
  std::ifstream f(path);
  if (!f) throw Error("IOError", "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_system(ss.str(), kind);
}

std::string system_to_text(const CoxeterSystem& W) {
  std::ostringstream os;
  os << W.rank() << '\n';
  for (int i = 0; i < W.rank(); ++i) {
    for (int j = 0; j < W.rank(); ++j)
      os << (j ? " " : "") << (W.m(i, j) == kInf ? std::string("inf") : std::to_string(W.m(i, j)));
    os << '\n';
  }
  for (int i = 0; i < W.rank(); ++i) os << (i ? " " : "") << W.gen_weight(i);
  os << '\n';
  return os.str();
}

SystemPtr dihedral(int m, int L1, int L2) {
  CoxeterMatrix mat(2);
  mat.set(0, 1, m);
  return CoxeterSystem::make(mat, {L1, L2});
}

SystemPtr type_a(int n) {
  CoxeterMatrix mat(n);
  for (int i = 0; i + 1 < n; ++i) mat.set(i, i + 1, 3);
  return CoxeterSystem::make(mat, std::vector<int>(n, 1));
}

SystemPtr type_b(int n, int a, int b) {
  CoxeterMatrix mat(n);
  for (int i = 0; i + 1 < n; ++i) mat.set(i, i + 1, i + 2 == n ? 4 : 3);
  std::vector<int> L(n, a);
  L[n - 1] = b;
  return CoxeterSystem::make(mat, L);
}

namespace {

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, ',')) {
    if (t == "inf" || t == "oo") {
      out.push_back(kInf);
      continue;
    }
    try {
      out.push_back(std::stoi(t));
    } catch (...) {
      throw Error("UsageError", "bad preset parameter '" + t + "'");
    }
  }
  return out;
}

}  // namespace

SystemPtr preset(const std::string& spec, EngineKind kind) {
  std::string name = spec, args;
  if (auto c = spec.find(':'); c != std::string::npos) {
    name = spec.substr(0, c);
    args = spec.substr(c + 1);
  }
  std::vector<int> a = int_list(args);
  auto need = [&](size_t k) {
    if (a.size() != k) throw Error("UsageError", "preset '" + spec + "' expects " + std::to_string(k) + " parameters");
  };
  auto with_kind = [&](SystemPtr W) {
    if (kind == EngineKind::Auto) return W;
    return SystemPtr(CoxeterSystem::make(W->matrix(), W->weights(), kind));
  };
  if (name == "i2m") {
    need(3);
    return with_kind(dihedral(a[0], a[1], a[2]));
  }
  if (name == "i2inf") {
    need(2);
    return with_kind(dihedral(kInf, a[0], a[1]));
  }
  if (name == "affA") {
    need(1);
    int n = a[0];
    if (n < 2) throw Error("UsageError", "affA needs n >= 2");
    CoxeterMatrix m(n);
    if (n == 2)
      m.set(0, 1, kInf);
    else
      for (int i = 0; i < n; ++i) m.set(i, (i + 1) % n, 3);
    return CoxeterSystem::make(m, std::vector<int>(n, 1), kind);
  }
  if (name == "affC") {
    if (a.size() != 1 && a.size() != 4)
      throw Error("UsageError", "affC expects p or p,L0,L,Lp");
    int p = a[0];
    if (p < 2) throw Error("UsageError", "affC needs p >= 2");
    CoxeterMatrix m(p + 1);
    for (int i = 0; i < p; ++i) m.set(i, i + 1, (i == 0 || i == p - 1) ? 4 : 3);
    std::vector<int> L(p + 1, 1);
    if (a.size() == 4) {
      L.assign(p + 1, a[2]);
      L[0] = a[1];
      L[p] = a[3];
    }
    return CoxeterSystem::make(m, L, kind);
  }
  if (name == "g2") {
    if (a.empty()) a = {1, 1};
    need(2);
    return with_kind(dihedral(6, a[0], a[1]));
  }
  if (name.size() >= 2 && (name[0] == 'a' || name[0] == 'b') &&
      std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
    int n = std::stoi(name.substr(1));
    if (n < 1 || n > 12) throw Error("UsageError", "rank out of range in '" + spec + "'");
    if (name[0] == 'a') {
      if (!a.empty()) throw Error("UsageError", "type A has equal parameters");
      return with_kind(type_a(n));
    }
    if (n < 2) throw Error("UsageError", "type B needs rank >= 2");
    if (a.empty()) a = {1, 1};
    need(2);
    return with_kind(type_b(n, a[0], a[1]));
  }
  throw Error("UsageError", "unknown preset '" + spec + "'");
}

Element dihedral_elt(const CoxeterSystem& W, int first, int k) {
  Word w(k);
  for (int i = 0; i < k; ++i) w[i] = static_cast<uint8_t>(i % 2 ? 2 - first : first - 1);
  return W.from_word(w);
}

// ---- folding ----

Element Fold::embed(const Element& x) const {
  Element r;
  for (uint8_t s : x.w) {
    GenSet I = 0;
    for (int g : orbits[s]) I |= 1u << g;
    r = big->mul(r, big->longest_element(I));
  }
  return r;
}

Fold fold(SystemPtr big, const std::vector<int>& u) {
  const int n = big->rank();
  if (static_cast<int>(u.size()) != n) throw Error("InvalidAutomorphism", "u has wrong size");
  std::vector<int> seen(n, 0);
  for (int x : u) {
    if (x < 0 || x >= n || seen[x]++) throw Error("InvalidAutomorphism", "u is not a permutation");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (big->m(u[i], u[j]) != big->m(i, j))
        throw Error("InvalidAutomorphism", "u does not preserve the Coxeter matrix");
  for (int i = 0; i < n; ++i)
    if (big->gen_weight(u[i]) != big->gen_weight(i))
      throw Error("InvalidAutomorphism", "u does not preserve the weights");

  Fold f;
  f.big = big;
  std::vector<int> done(n, 0);
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<int> orb;
    for (int j = i; !done[j]; j = u[j]) {
      done[j] = 1;
      orb.push_back(j);
    }
    std::sort(orb.begin(), orb.end());
    f.orbits.push_back(orb);
  }
  const int k = static_cast<int>(f.orbits.size());
  std::vector<Element> tau(k);
  std::vector<int> L(k);
  for (int o = 0; o < k; ++o) {
    GenSet I = 0;
    for (int g : f.orbits[o]) I |= 1u << g;
    if (!big->parabolic_finite(I))
      throw Error("OrbitNotFinite", "orbit " + std::to_string(o + 1) + " generates an infinite parabolic");
    tau[o] = big->longest_element(I);
    L[o] = big->weight(tau[o]);
  }
  CoxeterMatrix m(k);
  for (int o = 0; o < k; ++o)
    for (int p = o + 1; p < k; ++p) {
      Element prod = big->mul(tau[o], tau[p]);
      Element x = prod;
      int order = 1;
      const int cap = 64;
      while (!x.is_identity() && order < cap) {
        x = big->mul(x, prod);
        ++order;
      }
      m.set(o, p, x.is_identity() ? order : kInf);
    }
  f.folded = CoxeterSystem::make(m, L);

  // Weight additivity and injectivity of the embedding on a finite sample.
  int bound = f.folded->finite() ? 1 << 20 : 6;
  std::set<Element> images;
  for (auto& x : f.folded->enumerate(bound)) {
    Element e = f.embed(x);
    int expect = 0;
    for (uint8_t s : x.w) expect += tau[s].length();
    if (e.length() != expect)
      throw Error("FoldNotAdditive", "length of embed(" + x.str() + ") is not additive");
    if (!images.insert(e).second) throw Error("FoldNotAdditive", "embedding is not injective");
    Word uw;
    for (uint8_t s : e.w) uw.push_back(static_cast<uint8_t>(u[s]));
    if (big->from_word(uw) != e) throw Error("FoldNotAdditive", "embedded element is not u-fixed");
  }
  return f;
}

}  // namespace wkl
