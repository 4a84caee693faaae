#pragma once

#include "wkl/error.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wkl {

constexpr int kInf = 0;  // encodes m(s,s') = infinity

using Word = std::vector<uint8_t>;
using GenSet = uint32_t;  // bitmask over generators

enum class Side { Left, Right };

struct CoxeterMatrix {
  int n = 0;
  std::vector<int> m;  // row-major, kInf for infinity

  CoxeterMatrix() = default;
  explicit CoxeterMatrix(int n_) : n(n_), m(n_ * n_, 2) {
    for (int i = 0; i < n; ++i) at(i, i) = 1;
  }
  int& at(int i, int j) { return m[i * n + j]; }
  int at(int i, int j) const { return m[i * n + j]; }
  void set(int i, int j, int v) { at(i, j) = at(j, i) = v; }
  void validate() const;
  CoxeterMatrix restrict_to(const std::vector<int>& gens) const;
};

// A group element, stored as its ShortLex-least reduced word.
struct Element {
  Word w;

  int length() const { return static_cast<int>(w.size()); }
  bool is_identity() const { return w.empty(); }
  std::string str() const;  // 1-based, dot separated; "e" for the identity
  static Element parse(const std::string& s);

  friend bool operator==(const Element& a, const Element& b) { return a.w == b.w; }
  friend bool operator!=(const Element& a, const Element& b) { return a.w != b.w; }
  // ShortLex
  friend bool operator<(const Element& a, const Element& b) {
    if (a.w.size() != b.w.size()) return a.w.size() < b.w.size();
    return a.w < b.w;
  }
};

struct ElementHash {
  size_t operator()(const Element& e) const;
};
struct WordHash {
  size_t operator()(const Word& w) const;
};

class Engine {
public:
  virtual ~Engine() = default;
  virtual std::string name() const = 0;
  // ShortLex-least reduced word of the product of the letters of w.
  virtual Word normalize(const Word& w) const = 0;
  // w must be canonical. Returns the canonical product and the length change.
  virtual std::pair<Word, int> mul_gen(const Word& w, int s, Side side) const = 0;
};

enum class EngineKind { Auto, GenericTits, Dihedral, AffinePermA, AffinePermC };

std::unique_ptr<Engine> make_generic_engine(const CoxeterMatrix& m);
std::unique_ptr<Engine> make_dihedral_engine(int m);
// n generators s_0..s_{n-1} of the periodic-permutation model of affine A_{n-1}
std::unique_ptr<Engine> make_affine_a_engine(int n);
// p+1 generators s'_0..s'_p of the model of affine C_p inside affine A_{2p-1}
std::unique_ptr<Engine> make_affine_c_engine(int p);

class CoxeterSystem {
public:
  static std::shared_ptr<CoxeterSystem> make(CoxeterMatrix m, std::vector<int> weights,
                                             EngineKind kind = EngineKind::Auto);

  int rank() const { return mat_.n; }
  const CoxeterMatrix& matrix() const { return mat_; }
  int m(int s, int t) const { return mat_.at(s, t); }
  const std::vector<int>& weights() const { return L_; }
  int gen_weight(int s) const { return L_[s]; }
  const Engine& engine() const { return *eng_; }
  std::string engine_name() const { return eng_->name(); }
  // NonPositiveWeight unless every L(s) > 0
  void require_positive_weights(const std::string& who) const;
  bool positive_weights() const;

  Element identity() const { return {}; }
  Element gen(int s) const { return Element{Word{static_cast<uint8_t>(s)}}; }
  Element from_word(const Word& w) const { return Element{eng_->normalize(w)}; }
  Element parse(const std::string& s) const;

  std::pair<Element, int> mul_gen(const Element& w, int s, Side side) const;
  Element mul(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  int length(const Element& a) const { return a.length(); }
  int weight(const Element& a) const;
  int sign(const Element& a) const { return a.length() % 2 ? -1 : 1; }
  GenSet descents(const Element& a, Side side) const;
  bool is_descent(const Element& a, int s, Side side) const;

  bool bruhat_leq(const Element& y, const Element& w) const;
  std::vector<Element> bruhat_interval(const Element& y, const Element& w) const;
  std::vector<Element> enumerate(int max_length) const;

  bool parabolic_finite(GenSet I) const;
  bool finite() const { return parabolic_finite(all_gens()); }
  GenSet all_gens() const { return rank() == 32 ? ~0u : ((1u << rank()) - 1); }
  Element longest_element(GenSet I) const;
  Element min_coset_rep(GenSet I, const Element& w, Side side) const;
  // max over finite parabolic W_I of L(w_0^I)
  int conjectural_bound() const;

  std::string describe() const;
  std::string hash() const;

private:
  CoxeterSystem() = default;
  CoxeterMatrix mat_;
  std::vector<int> L_;
  std::unique_ptr<Engine> eng_;

  mutable std::shared_mutex mu_;
  mutable std::unordered_map<Word, Word, WordHash> mul_cache_[2];
  mutable std::map<std::pair<Word, Word>, bool> bruhat_cache_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

// Plain-text config: n, then n matrix rows ("inf" allowed), then n weights.
SystemPtr parse_system(const std::string& text, EngineKind kind = EngineKind::Auto);
SystemPtr load_system(const std::string& path, EngineKind kind = EngineKind::Auto);
std::string system_to_text(const CoxeterSystem& W);
// a<n>, b<n>[:a,b], g2[:L1,L2], i2m:m,L1,L2, i2inf:L1,L2, affA:n, affC:p[,L0,L,Lp]
SystemPtr preset(const std::string& spec, EngineKind kind = EngineKind::Auto);

SystemPtr dihedral(int m, int L1, int L2);  // m = kInf for the infinite dihedral group
SystemPtr type_a(int n);                    // A_n, L = l
SystemPtr type_b(int n, int a, int b);      // B_n, L(s_1..s_{n-1}) = a, L(s_n) = b

// Dihedral elements 1_k, 2_k: alternating words of length k starting with s_1 / s_2.
Element dihedral_elt(const CoxeterSystem& W, int first, int k);

// Quasisplit folding by a diagram automorphism u (a permutation of generators).
struct Fold {
  SystemPtr folded;
  SystemPtr big;
  std::vector<std::vector<int>> orbits;  // orbit of each folded generator
  Element embed(const Element& x) const;
};
Fold fold(SystemPtr big, const std::vector<int>& u);

}  // namespace wkl
