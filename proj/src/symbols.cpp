#include "wkl/symbols.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wkl::symbols {

namespace {

long binom2(long x) { return x * (x - 1) / 2; }

// the value sum_k z_k must take for rank n
long target_sum(const Params& p, int N, long n) {
  return p.a * n + static_cast<long>(p.a) * N * N + static_cast<long>(N) * (p.b - p.a) + p.a * binom2(p.r) +
         static_cast<long>(p.bp) * p.r;
}

int part(const Partition& a, int i) { return i >= 1 && i <= static_cast<int>(a.size()) ? a[i - 1] : 0; }

bool strictly_increasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) return false;
  return true;
}

// removes `sub` from `from` as multisets; false if not contained
bool remove_all(std::vector<int>& from, const std::vector<int>& sub) {
  for (int x : sub) {
    auto it = std::find(from.begin(), from.end(), x);
    if (it == from.end()) return false;
    from.erase(it);
  }
  return true;
}

Laurent q_int(int h, int a) {  // 1 + q + ... + q^{h-1}, q = v^{2a}
  Laurent s;
  for (int k = 0; k < h; ++k) s += Laurent::v(2 * a * k);
  return s;
}

}  // namespace

Params Params::make(int a, int b) {
  if (a <= 0 || b < 0) throw Error("UsageError", "need a > 0 and b >= 0");
  Params p;
  p.a = a;
  p.b = b;
  p.r = b / a;
  p.bp = b % a;
  return p;
}

bool Multiset::valid() const {
  const auto& z = entries;
  if (static_cast<int>(z.size()) != 2 * N + p.r) return false;
  if (!std::is_sorted(z.begin(), z.end()) || (!z.empty() && z[0] < 0)) return false;
  if (p.bp == 0) {
    std::map<int, int> cnt;
    for (int x : z) {
      if (x % p.a) return false;
      if (++cnt[x] > 2) return false;
    }
    return static_cast<int>(cnt.size()) >= N + p.r;
  }
  if (!strictly_increasing(z)) return false;
  int div = 0, cong = 0;
  for (int x : z) {
    if (x % p.a == 0) ++div;
    else if (x % p.a == p.bp) ++cong;
    else return false;
  }
  return div == N && cong == N + p.r;
}

std::vector<int> Multiset::singles() const {
  std::vector<int> out;
  for (size_t i = 0; i < entries.size(); ++i) {
    bool dup = (i > 0 && entries[i - 1] == entries[i]) || (i + 1 < entries.size() && entries[i + 1] == entries[i]);
    if (!dup) out.push_back(entries[i]);
  }
  return out;
}

std::vector<int> Multiset::doubles() const {
  std::vector<int> out;
  for (size_t i = 1; i < entries.size(); ++i)
    if (entries[i] == entries[i - 1]) out.push_back(entries[i]);
  return out;
}

int rank(const Multiset& m) {
  long s = std::accumulate(m.entries.begin(), m.entries.end(), 0L);
  long d = s - target_sum(m.p, m.N, 0);
  if (d < 0 || d % m.p.a) throw Error("RankMismatch", "entry sum does not correspond to a rank");
  return static_cast<int>(d / m.p.a);
}

Multiset shift(const Multiset& m) {
  Multiset r = m;
  r.N = m.N + 1;
  r.entries = {0, m.p.bp};
  for (int x : m.entries) r.entries.push_back(x + m.p.a);
  std::sort(r.entries.begin(), r.entries.end());
  return r;
}

Multiset staircase(int a, int b, int N) {
  Multiset m;
  m.p = Params::make(a, b);
  m.N = N;
  for (int i = 0; i < N; ++i) m.entries.push_back(i * a);
  for (int i = 0; i < N + m.p.r; ++i) m.entries.push_back(i * a + m.p.bp);
  std::sort(m.entries.begin(), m.entries.end());
  return m;
}

std::vector<Multiset> enumerate_multisets(int a, int b, int n, int N) {
  Params p = Params::make(a, b);
  const long S = target_sum(p, N, n);
  const int len = 2 * N + p.r;
  std::vector<int> vals;
  for (long x = 0; x <= S; ++x)
    if (x % a == 0 || (p.bp && x % a == p.bp)) vals.push_back(static_cast<int>(x));
  std::vector<Multiset> out;
  std::vector<int> cur;
  std::function<void(size_t, long)> rec = [&](size_t from, long left) {
    if (static_cast<int>(cur.size()) == len) {
      if (left == 0) {
        Multiset m{p, N, cur};
        if (m.valid()) out.push_back(m);
      }
      return;
    }
    const int need = len - static_cast<int>(cur.size());
    for (size_t i = from; i < vals.size(); ++i) {
      long x = vals[i];
      if (x * need > left) break;  // entries are nondecreasing
      cur.push_back(static_cast<int>(x));
      rec(p.bp == 0 ? i : i + 1, left - x);
      cur.pop_back();
    }
  };
  rec(0, S);
  return out;
}

bool Symbol::valid() const {
  if (static_cast<int>(top.size()) != N() + p.r) return false;
  if (!strictly_increasing(top) || !strictly_increasing(bottom)) return false;
  for (int x : top)
    if (x < 0 || x % p.a != p.bp) return false;
  for (int x : bottom)
    if (x < 0 || x % p.a != 0) return false;
  long s = std::accumulate(top.begin(), top.end(), 0L) + std::accumulate(bottom.begin(), bottom.end(), 0L);
  long d = s - target_sum(p, N(), 0);
  return d >= 0 && d % p.a == 0;
}

std::string Symbol::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < top.size(); ++i) os << (i ? "," : "") << top[i];
  os << '/';
  for (size_t i = 0; i < bottom.size(); ++i) os << (i ? "," : "") << bottom[i];
  return os.str();
}

Symbol Symbol::parse(const std::string& s, int a, int b) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw Error("ParseError", "symbol needs a '/' between rows: " + s);
  auto row = [&](const std::string& t) {
    std::vector<int> out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) {
        try {
          out.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw Error("ParseError", "bad symbol entry '" + item + "'");
        }
      }
    return out;
  };
  Symbol y;
  y.p = Params::make(a, b);
  y.top = row(s.substr(0, slash));
  y.bottom = row(s.substr(slash + 1));
  if (!y.valid()) throw Error("RankMismatch", "rows do not form a symbol for (a,b)=(" + std::to_string(a) + "," +
                                                    std::to_string(b) + "): " + s);
  return y;
}

Multiset Symbol::multiset() const {
  Multiset m;
  m.p = p;
  m.N = N();
  m.entries = top;
  m.entries.insert(m.entries.end(), bottom.begin(), bottom.end());
  std::sort(m.entries.begin(), m.entries.end());
  return m;
}

int rank(const Symbol& s) { return rank(s.multiset()); }

Symbol shift(const Symbol& s) {
  Symbol r;
  r.p = s.p;
  r.top = {s.p.bp};
  for (int x : s.top) r.top.push_back(x + s.p.a);
  r.bottom = {0};
  for (int x : s.bottom) r.bottom.push_back(x + s.p.a);
  return r;
}

int min_n(const Bipartition& ab, int a, int b) {
  Params p = Params::make(a, b);
  return std::max({0, static_cast<int>(ab.first.size()) - p.r, static_cast<int>(ab.second.size())});
}

Symbol bipartition_to_symbol(const Bipartition& ab, int a, int b, int N) {
  Symbol s;
  s.p = Params::make(a, b);
  const auto& [al, be] = ab;
  const int r = s.p.r;
  if (part(al, N + r + 1) != 0 || part(be, N + 1) != 0)
    throw Error("RankMismatch", "N = " + std::to_string(N) + " is too small for " + bipartition_str(ab));
  for (int i = 1; i <= N + r; ++i) s.top.push_back(a * (part(al, N + r - i + 1) + i - 1) + s.p.bp);
  for (int j = 1; j <= N; ++j) s.bottom.push_back(a * (part(be, N - j + 1) + j - 1));
  return s;
}

Symbol bipartition_to_symbol(const Bipartition& ab, int a, int b) {
  return bipartition_to_symbol(ab, a, b, min_n(ab, a, b));
}

Bipartition symbol_to_bipartition(const Symbol& s) {
  if (!s.valid()) throw Error("RankMismatch", "not a symbol: " + s.str());
  const int N = s.N(), r = s.p.r, a = s.p.a;
  Partition al(N + r), be(N);
  for (int i = 1; i <= N + r; ++i) al[N + r - i] = (s.top[i - 1] - s.p.bp) / a - (i - 1);
  for (int j = 1; j <= N; ++j) be[N - j] = s.bottom[j - 1] / a - (j - 1);
  auto trim = [](Partition& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  trim(al);
  trim(be);
  return {al, be};
}

Multiset complement(const Multiset& m, int t) {
  const Params& p = m.p;
  std::vector<int> big;
  for (int k = 0; k <= t; ++k) {
    big.push_back(k * p.a);
    big.push_back(k * p.a + p.bp);
  }
  std::vector<int> refl;
  for (int z : m.entries) refl.push_back(p.a * t + p.bp - z);
  if (!remove_all(big, refl)) throw Error("TTooSmall", "t = " + std::to_string(t) + " is too small");
  Multiset r;
  r.p = p;
  r.N = t + 1 - m.N - p.r;
  if (r.N < 0) throw Error("TTooSmall", "t = " + std::to_string(t) + " is too small");
  r.entries = big;
  std::sort(r.entries.begin(), r.entries.end());
  return r;
}

Symbol complement_symbol(const Symbol& s, int t) {
  const Params& p = s.p;
  std::vector<int> top, bottom;
  for (int k = 0; k <= t; ++k) {
    top.push_back(k * p.a + p.bp);
    bottom.push_back(k * p.a);
  }
  std::vector<int> rt, rb;
  for (int x : s.bottom) rt.push_back(p.a * t + p.bp - x);
  for (int x : s.top) rb.push_back(p.a * t + p.bp - x);
  if (!remove_all(top, rt) || !remove_all(bottom, rb))
    throw Error("TTooSmall", "t = " + std::to_string(t) + " is too small");
  Symbol r;
  r.p = p;
  r.top = top;
  r.bottom = bottom;
  if (static_cast<int>(r.top.size()) != r.N() + p.r) throw Error("TTooSmall", "t is too small");
  return r;
}

namespace {

long a_symbol_at(const Symbol& s) {
  const int N = s.N(), r = s.p.r, a = s.p.a, bp = s.p.bp;
  const auto& l = s.top;
  const auto& m = s.bottom;
  long A = 0, B = 0;
  for (int i = 0; i < N + r; ++i)
    for (int j = 0; j < N; ++j) {
      A += std::min(l[i], m[j]);
      B += std::min(a * i + bp, a * j);
    }
  for (int i = 0; i < N + r; ++i)
    for (int j = i + 1; j < N + r; ++j) {
      A += std::min(l[i], l[j]);
      B += std::min(a * i + bp, a * j + bp);
    }
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      A += std::min(m[i], m[j]);
      B += std::min(a * i, a * j);
    }
  return A - B;
}

}  // namespace

long a_symbol(const Symbol& s) {
  if (!s.valid()) throw Error("RankMismatch", "not a symbol: " + s.str());
  long v = a_symbol_at(s);
  if (a_symbol_at(shift(s)) != v) throw Error("InternalError", "a-value changed under shift for " + s.str());
  return v;
}

long f_symbol(const Symbol& s) {
  if (s.p.bp > 0) return 1;
  int singles = static_cast<int>(s.multiset().singles().size());
  return 1L << ((singles - s.p.r) / 2);
}

Laurent hoefsmit_f(const Bipartition& ab, int a, int b) {
  if (a <= 0 || b <= 0) throw Error("UsageError", "need a, b > 0");
  const Partition& al = ab.first;
  const Partition& be = ab.second;
  const Partition ald = dual(al), bed = dual(be);
  auto H = [&](const Partition& x, const Partition& xd) {
    long e = 0;
    for (int c : xd) e += binom2(c);
    Laurent r = Laurent::v(-2 * a * static_cast<int>(e));
    for (int i = 1; i <= static_cast<int>(x.size()); ++i)
      for (int j = 1; j <= x[i - 1]; ++j) r *= q_int(part(x, i) + part(xd, j) - i - j + 1, a);
    return r;
  };
  // G_{x,y}(q, y^{sign}); the q^{1/2} powers become v^a
  auto G = [&](const Partition& x, const Partition& xd, const Partition& yd, int sign) {
    long e = 0;
    for (int i = 1; i <= static_cast<int>(std::min(xd.size(), yd.size())); ++i) e += part(xd, i) * part(yd, i);
    Laurent r = Laurent::v(-a * static_cast<int>(e));
    for (int i = 1; i <= static_cast<int>(x.size()); ++i)
      for (int j = 1; j <= x[i - 1]; ++j)
        r *= Laurent::v(2 * a * (part(x, i) + part(yd, j) - i - j + 1) + sign * 2 * b) + 1;
    return r;
  };
  return H(al, ald) * H(be, bed) * G(al, ald, bed, 1) * G(be, bed, ald, -1);
}

std::vector<std::vector<int>> admissible_involutions(int M, int r) {
  if (r < 0 || r > M || (M - r) % 2) throw Error("ParityMismatch", "need 0 <= r <= M and M = r mod 2");
  std::set<std::vector<int>> seen;
  std::vector<int> inv(M);
  std::iota(inv.begin(), inv.end(), 0);
  std::function<void(std::vector<int>)> rec = [&](std::vector<int> rest) {
    if (static_cast<int>(rest.size()) == r) {
      seen.insert(inv);
      return;
    }
    for (size_t i = 0; i + 1 < rest.size(); ++i) {
      int z = rest[i], zp = rest[i + 1];
      inv[z] = zp;
      inv[zp] = z;
      std::vector<int> next;
      for (int x : rest)
        if (x != z && x != zp) next.push_back(x);
      rec(next);
      inv[z] = z;
      inv[zp] = zp;
    }
  };
  std::vector<int> all(M);
  std::iota(all.begin(), all.end(), 0);
  rec(all);
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> s_iota(const std::vector<int>& inv) {
  std::vector<std::pair<int, int>> orbits;
  for (int i = 0; i < static_cast<int>(inv.size()); ++i)
    if (inv[i] > i) orbits.emplace_back(i, inv[i]);
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << orbits.size()); ++mask) {
    std::vector<int> y;
    for (size_t k = 0; k < orbits.size(); ++k) y.push_back(mask >> k & 1 ? orbits[k].second : orbits[k].first);
    std::sort(y.begin(), y.end());
    out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Symbol> constructible_family(const Multiset& m, const std::vector<int>& inv) {
  if (m.p.bp != 0) throw Error("UsageError", "families from involutions need b' = 0");
  const std::vector<int> Z = m.singles(), dbl = m.doubles();
  if (inv.size() != Z.size()) throw Error("ParityMismatch", "involution size differs from the number of singles");
  std::vector<Symbol> out;
  for (const auto& Y : s_iota(inv)) {
    Symbol s;
    s.p = m.p;
    std::vector<char> inY(Z.size(), 0);
    for (int k : Y) inY[k] = 1;
    for (size_t k = 0; k < Z.size(); ++k) (inY[k] ? s.bottom : s.top).push_back(Z[k]);
    for (int d : dbl) {
      s.top.push_back(d);
      s.bottom.push_back(d);
    }
    std::sort(s.top.begin(), s.top.end());
    std::sort(s.bottom.begin(), s.bottom.end());
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Symbol>> families(int a, int b, int n) {
  Params p = Params::make(a, b);
  if (p.bp != 0) throw Error("UsageError", "families from involutions need b' = 0");
  const int N = n + 1;
  std::set<std::vector<Symbol>> out;
  for (const Multiset& m : enumerate_multisets(a, b, n, N)) {
    int M = static_cast<int>(m.singles().size());
    // the S_iota for different iota overlap; a family is their union
    std::set<Symbol> fam;
    for (const auto& inv : admissible_involutions(M, p.r))
      for (auto& s : constructible_family(m, inv)) fam.insert(s);
    out.insert({fam.begin(), fam.end()});
  }
  return {out.begin(), out.end()};
}

bool involution_graph_connected(int M, int r) {
  auto invs = admissible_involutions(M, r);
  std::map<std::vector<int>, int> idx;
  std::vector<int> parent;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto node = [&](const std::vector<int>& y) {
    auto [it, fresh] = idx.emplace(y, static_cast<int>(parent.size()));
    if (fresh) parent.push_back(it->second);
    return it->second;
  };
  // every (M - r)/2-subset is a vertex
  const int p0 = (M - r) / 2;
  for (unsigned mask = 0; mask < (1u << M); ++mask)
    if (__builtin_popcount(mask) == p0) {
      std::vector<int> y;
      for (int i = 0; i < M; ++i)
        if (mask >> i & 1) y.push_back(i);
      node(y);
    }
  for (const auto& inv : invs) {
    auto ys = s_iota(inv);
    for (size_t k = 1; k < ys.size(); ++k) parent[find(node(ys[k]))] = find(node(ys[0]));
  }
  std::set<int> roots;
  for (int i = 0; i < static_cast<int>(parent.size()); ++i) roots.insert(find(i));
  return roots.size() <= 1;
}

Partition dual(const Partition& alpha) {
  Partition d;
  for (int j = 1; !alpha.empty() && j <= alpha[0]; ++j) {
    int c = 0;
    for (int x : alpha) c += x >= j;
    d.push_back(c);
  }
  return d;
}

long a_partition(const Partition& alpha, int a) {
  long s = 0;
  for (int c : dual(alpha)) s += a * binom2(c);
  return s;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& al : partitions(k))
      for (const auto& be : partitions(n - k)) out.emplace_back(al, be);
  return out;
}

std::string bipartition_str(const Bipartition& ab) {
  auto ps = [](const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
  };
  return ps(ab.first) + ";" + ps(ab.second);
}

}  // namespace wkl::symbols
