#include "wkl/affine.hpp"

#include <algorithm>
#include <set>

namespace wkl {

namespace {

long fdiv(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
long cdiv(long a, long b) { return -fdiv(-a, b); }
long pmod(long a, long b) { return a - b * fdiv(a, b); }

// Number of tau_n-orbits of inversions (i,j), i in [1,n]; `odd_only` keeps i+j = 1 mod n.
long count_orbits(const PeriodicPerm& s, bool odd_only) {
  const long n = s.n;
  long total = 0;
  for (long i = 1; i <= n; ++i)
    for (long jp = 1; jp <= n; ++jp) {
      if (odd_only && pmod(i + jp, n) != pmod(1, n)) continue;
      // j = jp + k n > i and s(jp) + k n < s(i)
      long lo = fdiv(i - jp, n) + 1;
      long hi = cdiv(s(i) - s(jp), n) - 1;
      if (hi >= lo) total += hi - lo + 1;
    }
  return total;
}

}  // namespace

PeriodicPerm PeriodicPerm::identity(int n) {
  PeriodicPerm p;
  p.n = n;
  for (int k = 1; k <= n; ++k) p.win.push_back(k);
  return p;
}

PeriodicPerm PeriodicPerm::from_window(std::vector<long> win) {
  PeriodicPerm p;
  p.n = static_cast<int>(win.size());
  if (p.n < 1) throw Error("NotPeriodic", "empty window");
  std::set<long> res;
  for (long x : win) res.insert(pmod(x, p.n));
  if (static_cast<int>(res.size()) != p.n)
    throw Error("NotPeriodic", "window is not a bijection modulo n");
  p.win = std::move(win);
  return p;
}

PeriodicPerm PeriodicPerm::from_function(int n, const std::function<long(long)>& f, long lo,
                                         long hi) {
  for (long z = lo; z <= hi; ++z)
    if (f(z + n) != f(z) + n)
      throw Error("NotPeriodic", "f(z+n) != f(z)+n at z=" + std::to_string(z));
  std::vector<long> win;
  for (long k = 1; k <= n; ++k) win.push_back(f(k));
  return from_window(std::move(win));
}

long PeriodicPerm::operator()(long z) const {
  long r = pmod(z - 1, n);  // z = 1 + r + q n
  long q = fdiv(z - 1, n);
  return win[r] + q * n;
}

PeriodicPerm PeriodicPerm::compose(const PeriodicPerm& b) const {
  PeriodicPerm r;
  r.n = n;
  for (long k = 1; k <= n; ++k) r.win.push_back((*this)(b(k)));
  return r;
}

PeriodicPerm PeriodicPerm::inverse() const {
  PeriodicPerm r;
  r.n = n;
  r.win.assign(n, 0);
  for (long k = 1; k <= n; ++k) {
    long y = win[k - 1];
    long r0 = pmod(y - 1, n), q = fdiv(y - 1, n);
    r.win[r0] = k - q * n;
  }
  return r;
}

long chi(const PeriodicPerm& s) {
  long c = 0;
  for (long k = 1; k <= s.n; ++k) c += s(k) - k;
  return c;
}

long inversion_orbits(const PeriodicPerm& s) { return count_orbits(s, false); }
long inversion_orbits_odd(const PeriodicPerm& s) { return count_orbits(s, true); }

PeriodicPerm affine_a_gen(int n, int m) {
  m = static_cast<int>(pmod(m, n));
  PeriodicPerm p = PeriodicPerm::identity(n);
  for (long k = 1; k <= n; ++k) {
    if (pmod(k, n) == m)
      p.win[k - 1] = k + 1;
    else if (pmod(k, n) == pmod(m + 1, n))
      p.win[k - 1] = k - 1;
  }
  return p;
}

PeriodicPerm affine_a_perm(int n, const Word& w) {
  PeriodicPerm p = PeriodicPerm::identity(n);
  for (uint8_t s : w) p = p.compose(affine_a_gen(n, s));
  return p;
}

namespace {

Word peel(PeriodicPerm sigma, int ngens, const std::function<PeriodicPerm(int)>& gen,
          const std::function<long(const PeriodicPerm&)>& len) {
  Word out;
  long l = len(sigma);
  while (l > 0) {
    bool found = false;
    for (int s = 0; s < ngens; ++s) {
      PeriodicPerm t = gen(s).compose(sigma);
      long lt = len(t);
      if (lt < l) {
        out.push_back(static_cast<uint8_t>(s));
        sigma = std::move(t);
        l = lt;
        found = true;
        break;
      }
    }
    if (!found) throw Error("InternalError", "no descent in periodic permutation");
  }
  return out;
}

}  // namespace

RoundTrip affine_perm_roundtrip(const CoxeterSystem& W, const PeriodicPerm& sigma) {
  const int n = W.rank();
  if (sigma.n != n) throw Error("NotPeriodic", "period does not match the system rank");
  PeriodicPerm::from_window(sigma.win);
  if (chi(sigma) != 0) throw Error("NonzeroChi", "sum of sigma(k)-k is " + std::to_string(chi(sigma)));
  Word w = peel(
      sigma, n, [n](int s) { return affine_a_gen(n, s); }, inversion_orbits);
  Element e = W.from_word(w);
  long l = inversion_orbits(sigma);
  if (e.length() != l) throw Error("InternalError", "engine length disagrees with orbit count");
  return {e, static_cast<int>(l)};
}

PeriodicPerm affine_c_gen(int p, int i) {
  const int n = 2 * p;
  if (i == 0 || i == p) return affine_a_gen(n, i);
  return affine_a_gen(n, i).compose(affine_a_gen(n, -i));
}

PeriodicPerm affine_c_perm(int p, const Word& w) {
  PeriodicPerm r = PeriodicPerm::identity(2 * p);
  for (uint8_t s : w) r = r.compose(affine_c_gen(p, s));
  return r;
}

bool commutes_with_reflection(const PeriodicPerm& s) {
  for (long z = 1 - s.n; z <= s.n; ++z)
    if (s(1 - z) != 1 - s(z)) return false;
  return true;
}

CLengths c_lengths(const PeriodicPerm& s) {
  const long p = s.n / 2;
  const long la = inversion_orbits(s), l1 = inversion_orbits_odd(s);
  CLengths r;
  r.l0 = (la - l1) / 2;
  auto in_z1 = [p](long z) {
    long r0 = pmod(z, 2 * p);
    return r0 >= 1 && r0 <= p;
  };
  long twice_lp = 0, twice_lpp = 0;
  for (long i = 1 - p; i <= p; ++i) {
    long si = s(i);
    if (i >= si) continue;
    long f = fdiv(si - 1, p) - cdiv(i, p) + 1;
    bool i1 = in_z1(i), s1 = in_z1(si);
    if (i1 == s1) {
      twice_lp += f;
      twice_lpp += f;
    } else if (!i1 && s1) {
      twice_lp += f + 1;
      twice_lpp += f - 1;
    } else {
      twice_lp += f - 1;
      twice_lpp += f + 1;
    }
  }
  r.lp = twice_lp / 2;
  r.lpp = twice_lpp / 2;
  return r;
}

bool in_kernel_chi1(const PeriodicPerm& s) { return c_lengths(s).lp % 2 == 0; }
bool in_kernel_chi2(const PeriodicPerm& s) { return c_lengths(s).lpp % 2 == 0; }

// ---- engines ----

namespace {

class AffineEngine : public Engine {
public:
  AffineEngine(int ngens, int period, bool type_c) : g_(ngens), n_(period), c_(type_c) {}
  std::string name() const override { return c_ ? "affine-perm-C" : "affine-perm-A"; }

  PeriodicPerm gen(int s) const { return c_ ? affine_c_gen(n_ / 2, s) : affine_a_gen(n_, s); }
  long len(const PeriodicPerm& p) const {
    return c_ ? c_lengths(p).total() : inversion_orbits(p);
  }
  PeriodicPerm perm(const Word& w) const {
    PeriodicPerm p = PeriodicPerm::identity(n_);
    for (uint8_t s : w) p = p.compose(gen(s));
    return p;
  }

  Word normalize(const Word& w) const override {
    return peel(
        perm(w), g_, [this](int s) { return gen(s); }, [this](const PeriodicPerm& p) { return len(p); });
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
  int g_, n_;
  bool c_;
};

}  // namespace

std::unique_ptr<Engine> make_affine_a_engine(int n) {
  return std::make_unique<AffineEngine>(n, n, false);
}
std::unique_ptr<Engine> make_affine_c_engine(int p) {
  return std::make_unique<AffineEngine>(p + 1, 2 * p, true);
}

}  // namespace wkl
