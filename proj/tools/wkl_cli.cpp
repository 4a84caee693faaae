#include "CLI11.hpp"
#include "wkl/conjectures.hpp"
#include "wkl/jring.hpp"
#include "wkl/oracle_diff.hpp"
#include "wkl/symbols.hpp"

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace wkl;
using json = nlohmann::json;

namespace {

struct Config {
  std::string system;
  std::string engine = "auto";
  int bound = 10;
  int margin = 3;
  std::string format = "text";
  std::string cache_dir;
  bool oracle = false;
  bool serial = false;
  int threads = 0;
};

// 1 = a check failed
struct CheckFailed {};

EngineKind engine_kind(const std::string& s) {
  if (s == "auto") return EngineKind::Auto;
  if (s == "generic") return EngineKind::GenericTits;
  if (s == "dihedral") return EngineKind::Dihedral;
  if (s == "affine-a") return EngineKind::AffinePermA;
  if (s == "affine-c") return EngineKind::AffinePermC;
  throw Error("UsageError", "--engine: unknown engine '" + s + "'");
}

SystemPtr load(const Config& c) {
  if (c.system.empty()) throw Error("UsageError", "--system is required for this subcommand");
  EngineKind k = engine_kind(c.engine);
  if (std::filesystem::exists(c.system)) return load_system(c.system, k);
  return preset(c.system, k);
}

Mode mode(const Config& c) { return c.serial ? Mode::Serial : Mode::Parallel; }

std::string cache_dir(const Config& c) {
  if (!c.cache_dir.empty()) return c.cache_dir;
  if (const char* e = std::getenv("WKL_CACHE_DIR")) return e;
  return "";
}

std::unique_ptr<Analysis> analysis(const Config& c, SystemPtr W) {
  if (c.margin < 0 || c.bound < 0) throw Error("UsageError", "--bound and --margin must be >= 0");
  return Analysis::build(W, W->finite() ? -1 : c.bound, c.margin, mode(c), cache_dir(c));
}

// KL table on a region large enough for the given elements
std::unique_ptr<KLTable> kl_for(const Config& c, SystemPtr W, int len, RegionPtr& R) {
  R = std::make_shared<Region>(W, W->finite() ? -1 : len);
  return std::make_unique<KLTable>(R, mode(c), cache_dir(c));
}

std::string laurent_out(const Config& c, const Laurent& p) {
  if (c.format == "tex") return p.tex();
  if (c.format == "json") return p.to_json().dump();
  return p.str();
}

dihedral_oracle::Oracle make_oracle(const CoxeterSystem& W) {
  if (W.rank() != 2) throw Error("UsageError", "--oracle needs a rank-2 system");
  return dihedral_oracle::Oracle(W.m(0, 1), W.gen_weight(0), W.gen_weight(1));
}

dihedral_oracle::DElt to_delt(const dihedral_oracle::Oracle& O, const Element& e) {
  return e.w.empty() ? O.elt(1, 0) : O.elt(e.w[0] + 1, e.length());
}


void write_vec(const Config& c, const Region& R, const std::vector<std::pair<int, Laurent>>& terms,
               const std::string& basis, std::ostream& os) {
  if (c.format == "json") {
    json t = json::array();
    for (auto& [y, p] : terms) t.push_back({R.elt(y).str(), p.to_json()});
    os << json{{"basis", basis}, {"terms", t}}.dump() << '\n';
  } else if (c.format == "csv") {
    os << "element,coefficient\n";
    for (auto& [y, p] : terms) os << R.elt(y).str() << ',' << p.str() << '\n';
  } else {
    std::string out;
    for (auto& [y, p] : terms) {
      if (!out.empty()) out += " + ";
      if (c.format == "tex") out += "(" + p.tex() + ")" + basis + "_{" + R.elt(y).str() + "}";
      else out += "(" + p.str() + ")" + basis + "_" + R.elt(y).str();
    }
    os << (out.empty() ? "0" : out) << '\n';
  }
}

void cmd_klpoly(const Config& c, const std::string& ys, const std::string& ws) {
  SystemPtr W = load(c);
  Element y = W->parse(ys), w = W->parse(ws);
  RegionPtr R;
  auto kl = kl_for(c, W, w.length(), R);
  Laurent p = kl->p(y, w);
  if (c.format == "json") {
    std::cout << json{{"y", y.str()}, {"w", w.str()}, {"p", p.to_json()}}.dump() << '\n';
  } else if (c.format == "csv") {
    std::cout << "y,w,p\n" << y.str() << ',' << w.str() << ',' << p.str() << '\n';
  } else {
    std::cout << laurent_out(c, p) << '\n';
  }
  if (c.oracle) {
    auto O = make_oracle(*W);
    auto cw = O.c_closed_form(to_delt(O, w));
    auto it = cw.find(to_delt(O, y));
    Laurent o = it == cw.end() ? Laurent() : it->second;
    std::cout << "oracle: " << laurent_out(c, o) << (o == p ? "" : "  (differs)") << '\n';
    if (o != p) throw CheckFailed{};
  }
}

void cmd_cbasis(const Config& c, const std::string& ws) {
  SystemPtr W = load(c);
  Element w = W->parse(ws);
  RegionPtr R;
  auto kl = kl_for(c, W, w.length(), R);
  int wi = R->id_or_throw(w);
  std::vector<std::pair<int, Laurent>> terms;
  for (int y : R->below(wi))
    if (!kl->p(y, wi).is_zero()) terms.emplace_back(y, kl->p(y, wi));
  write_vec(c, *R, terms, "T", std::cout);
  if (c.oracle) {
    auto O = make_oracle(*W);
    auto cw = O.c_closed_form(to_delt(O, w));
    bool same = cw.size() == terms.size();
    for (auto& [y, p] : terms) {
      auto it = cw.find(to_delt(O, R->elt(y)));
      same = same && it != cw.end() && it->second == p;
    }
    std::cout << "oracle: " << (same ? "agrees" : "differs") << '\n';
    if (!same) throw CheckFailed{};
  }
}

void cmd_mu(const Config& c, int s, const std::string& ys, const std::string& ws) {
  SystemPtr W = load(c);
  if (s < 1 || s > W->rank()) throw Error("UsageError", "generator index out of range");
  Element y = W->parse(ys), w = W->parse(ws);
  RegionPtr R;
  auto kl = kl_for(c, W, w.length(), R);
  Laurent m = kl->mu(s - 1, R->id_or_throw(y), R->id_or_throw(w));
  if (c.format == "json") std::cout << json{{"s", s}, {"y", y.str()}, {"w", w.str()}, {"mu", m.to_json()}}.dump() << '\n';
  else std::cout << laurent_out(c, m) << '\n';
}

void cmd_htable(const Config& c) {
  SystemPtr W = load(c);
  auto an = analysis(c, W);
  const Region& R = an->R();
  const int nd = an->domain_size();
  if (c.format == "json") {
    json rows = json::array();
    for (int x = 0; x < nd; ++x)
      for (int y = 0; y < nd; ++y)
        for (auto& [z, h] : an->ht->h(x, y)) rows.push_back({R.elt(x).str(), R.elt(y).str(), R.elt(z).str(), h.to_json()});
    std::cout << json{{"region", an->describe()}, {"h", rows}}.dump() << '\n';
    return;
  }
  std::cout << "x,y,z,h\n";
  for (int x = 0; x < nd; ++x)
    for (int y = 0; y < nd; ++y)
      for (auto& [z, h] : an->ht->h(x, y))
        std::cout << R.elt(x).str() << ',' << R.elt(y).str() << ',' << R.elt(z).str() << ','
                  << (c.format == "tex" ? h.tex() : h.str()) << '\n';
}

void cmd_cells(const Config& c, const std::string& kind) {
  SystemPtr W = load(c);
  CellKind k = parse_kind(kind);
  auto an = analysis(c, W);
  const Cells& cells = k == CellKind::Left ? *an->left : k == CellKind::Right ? *an->right : *an->two;
  CellPartition p = cells.partition();
  const Region& R = an->R();
  if (c.format == "json") {
    std::cout << p.to_json(R).dump() << '\n';
  } else if (c.format == "csv") {
    std::cout << "block,element\n";
    for (size_t i = 0; i < p.blocks.size(); ++i)
      for (int w : p.blocks[i]) std::cout << i << ',' << R.elt(w).str() << '\n';
  } else {
    std::cout << "# " << kind_name(k) << " cells, " << an->describe() << (p.heuristic ? " (windowed)" : "") << '\n';
    for (auto& b : p.blocks) {
      std::cout << '{';
      for (size_t i = 0; i < b.size(); ++i) std::cout << (i ? ", " : "") << R.elt(b[i]).str();
      std::cout << "}\n";
    }
  }
}

void cmd_afun(const Config& c) {
  SystemPtr W = load(c);
  auto an = analysis(c, W);
  const AData& ad = *an->ad;
  const Region& R = an->R();
  if (c.format == "json") {
    json rows = json::array();
    for (int z = 0; z < ad.trusted; ++z)
      rows.push_back({{"z", R.elt(z).str()}, {"a", ad.a[z]}, {"certified", static_cast<bool>(ad.certified[z])},
                      {"delta", ad.delta[z]}, {"n", ad.n[z]}});
    std::cout << json{{"region", an->describe()}, {"rows", rows}}.dump() << '\n';
  } else {
    ad.write_csv(std::cout, R);
  }
}

void cmd_dset(const Config& c) {
  SystemPtr W = load(c);
  auto an = analysis(c, W);
  const Region& R = an->R();
  auto ds = an->ad->dset();
  if (c.format == "json") {
    json d = json::array();
    for (int z : ds) d.push_back({R.elt(z).str(), an->ad->n[z]});
    std::cout << json{{"region", an->describe()}, {"D", d}}.dump() << '\n';
  } else {
    std::cout << "d,n_d\n";
    for (int z : ds) std::cout << R.elt(z).str() << ',' << an->ad->n[z] << '\n';
  }
}

void cmd_gamma(const Config& c) {
  SystemPtr W = load(c);
  auto an = analysis(c, W);
  if (!an->ad->all_certified()) throw Error("UncertifiedRegion", "gamma needs certified a-values on the window");
  an->ad->write_gamma_csv(std::cout, an->R());
}

void cmd_jring(const Config& c) {
  SystemPtr W = load(c);
  auto an = analysis(c, W);
  JTable J(*an);
  if (c.format == "json") {
    std::cout << J.to_json().dump() << '\n';
    return;
  }
  const Region& R = an->R();
  std::cout << "x,y,product\n";
  for (int x = 0; x < J.range(); ++x)
    for (int y = 0; y < J.range(); ++y) {
      const JZ& p = J.product(x, y);
      if (p.is_zero()) continue;
      std::string s;
      for (auto& [z, k] : p.terms) s += (s.empty() ? "" : " + ") + std::to_string(k) + "t_" + R.elt(z).str();
      std::cout << R.elt(x).str() << ',' << R.elt(y).str() << ',' << s << '\n';
    }
}

void cmd_phi(const Config& c, const std::string& xs) {
  SystemPtr W = load(c);
  auto an = analysis(c, W);
  JTable J(*an);
  const Region& R = an->R();
  int x = R.id_or_throw(W->parse(xs));
  if (x >= an->domain_size()) throw Error("RegionTooSmall", "x lies outside the h-domain");
  JA r = J.phi_dagger(x);
  std::vector<std::pair<int, Laurent>> terms(r.terms.begin(), r.terms.end());
  write_vec(c, R, terms, "t", std::cout);
}

void cmd_check(const Config& c, const std::string& only) {
  SystemPtr W = load(c);
  auto an = analysis(c, W);
  std::vector<std::string> ids;
  std::stringstream ss(only);
  for (std::string s; std::getline(ss, s, ',');)
    if (!s.empty()) ids.push_back(s);
  auto reps = check_all(*an, ids);
  bool fail = false;
  for (auto& r : reps) {
    fail = fail || r.status == Status::Fails;
    if (c.format == "json") std::cout << r.to_json().dump() << '\n';
    else {
      std::cout << r.id << ' ' << status_name(r.status);
      for (auto& w : r.witnesses) std::cout << "  witness " << w.dump();
      std::cout << '\n';
    }
  }
  std::cout << "meta-check: " << meta_check(reps) << '\n';
  if (fail) throw CheckFailed{};
}

void cmd_fold(const Config& c, const std::string& us) {
  SystemPtr W = load(c);
  std::vector<int> u;
  std::stringstream ss(us);
  for (std::string s; std::getline(ss, s, ',');) u.push_back(std::stoi(s) - 1);
  Fold f = fold(W, u);
  std::cout << system_to_text(*f.folded);
  if (!W->finite()) return;
  auto small = Analysis::build(f.folded, -1, 0, mode(c));
  auto big = Analysis::build(W, -1, 0, mode(c));
  bool fail = false;
  for (auto& r : quasisplit_compare(f, *small, *big)) {
    fail = fail || r.status == Status::Fails;
    if (c.format == "json") std::cout << r.to_json().dump() << '\n';
    else std::cout << r.id << ' ' << status_name(r.status) << '\n';
  }
  if (fail) throw CheckFailed{};
}

symbols::Bipartition parse_bipartition(const std::string& s) {
  auto semi = s.find(';');
  if (semi == std::string::npos) throw Error("ParseError", "bipartition must look like '2,1;1'");
  auto part = [](const std::string& t) {
    symbols::Partition p;
    std::stringstream ss(t);
    for (std::string x; std::getline(ss, x, ',');)
      if (!x.empty() && std::stoi(x) > 0) p.push_back(std::stoi(x));
    std::sort(p.rbegin(), p.rend());
    return p;
  };
  return {part(s.substr(0, semi)), part(s.substr(semi + 1))};
}

void cmd_symbols(const Config& c, const std::string& what, const std::string& arg, int a, int b, int n) {
  using namespace symbols;
  auto as_symbol = [&](const std::string& s) {
    if (s.find('/') != std::string::npos) return Symbol::parse(s, a, b);
    return bipartition_to_symbol(parse_bipartition(s), a, b);
  };
  if (what == "rank") {
    if (arg.empty()) throw Error("UsageError", "symbols rank needs a symbol or bipartition");
    Symbol s = as_symbol(arg);
    std::cout << s.str() << ' ' << rank(s) << '\n';
  } else if (what == "a") {
    if (arg.empty()) {
      for (auto& ab : bipartitions(n)) {
        Symbol s = bipartition_to_symbol(ab, a, b);
        std::cout << bipartition_str(ab) << ' ' << s.str() << " a=" << a_symbol(s) << " f=" << f_symbol(s) << '\n';
      }
      return;
    }
    Symbol s = as_symbol(arg);
    std::cout << s.str() << " a=" << a_symbol(s) << " f=" << f_symbol(s) << '\n';
  } else if (what == "hoefsmit") {
    auto show = [&](const Bipartition& ab) {
      Laurent f = hoefsmit_f(ab, a, b);
      std::cout << bipartition_str(ab) << ' ' << laurent_out(c, f) << '\n';
    };
    if (arg.empty())
      for (auto& ab : bipartitions(n)) show(ab);
    else show(parse_bipartition(arg));
  } else if (what == "families") {
    for (auto& fam : families(a, b, n)) {
      std::string s;
      for (auto& y : fam) s += (s.empty() ? "" : " | ") + bipartition_str(symbol_to_bipartition(y));
      std::cout << '{' << s << "} a=" << a_symbol(fam[0]) << '\n';
    }
  } else {
    throw Error("UsageError", "symbols: expected rank, a, hoefsmit or families");
  }
}

void cmd_oracle_diff(const Config& c) {
  SystemPtr W = load(c);
  if (W->rank() != 2) throw Error("UsageError", "oracle-diff needs a rank-2 system");
  OracleDiffReport rep =
      oracle_diff(W->m(0, 1), W->gen_weight(0), W->gen_weight(1), c.bound, c.margin, mode(c));
  if (c.format == "json") {
    std::cout << rep.to_json().dump() << '\n';
  } else {
    std::cout << rep.system << '\n';
    for (auto& [k, n] : rep.per_check) std::cout << "  " << k << ": " << n << " compared\n";
    for (auto& d : rep.diffs)
      std::cout << "  MISMATCH " << d.check << " " << d.input << "\n    oracle:  " << d.oracle
                << "\n    generic: " << d.generic << '\n';
    std::cout << rep.diffs.size() << " discrepancies in " << rep.checks << " checks\n";
  }
  if (!rep.diffs.empty()) throw CheckFailed{};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"KL polynomials, cells, the a-function and the ring J for weighted Coxeter groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_option("--system", c.system, "system file, or a preset: a<n>, b<n>[:a,b], g2[:a,b], i2m:m,L1,L2, i2inf:L1,L2, affA:n, affC:p");
  app.add_option("--engine", c.engine, "word engine: auto, generic, dihedral, affine-a, affine-c");
  app.add_option("--bound", c.bound, "window radius for infinite groups")->check(CLI::NonNegativeNumber);
  app.add_option("--margin", c.margin, "cell margin inside the window")->check(CLI::NonNegativeNumber);
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json", "csv", "tex"}));
  app.add_option("--cache-dir", c.cache_dir, "KL column cache (default: $WKL_CACHE_DIR)");
  app.add_flag("--oracle", c.oracle, "also print the dihedral closed form");
  app.add_flag("--serial", c.serial, "use the serial reference kernels");
  app.add_option("--threads", c.threads, "thread cap")->check(CLI::NonNegativeNumber);

  std::string y, w, x, kind = "left", only, u, what, arg;
  int s = 1, a = 1, b = 1, n = 2;
  auto klpoly = app.add_subcommand("klpoly", "p_{y,w}");
  klpoly->add_option("y", y)->required();
  klpoly->add_option("w", w)->required();
  auto cbasis = app.add_subcommand("cbasis", "c_w in the T-basis");
  cbasis->add_option("w", w)->required();
  auto mu = app.add_subcommand("mu", "mu^s_{y,w}");
  mu->add_option("s", s)->required();
  mu->add_option("y", y)->required();
  mu->add_option("w", w)->required();
  auto htable = app.add_subcommand("htable", "structure constants h_{x,y,z}");
  auto cells = app.add_subcommand("cells", "cell partition");
  cells->add_option("--kind", kind)->check(CLI::IsMember({"left", "right", "two-sided"}));
  auto afun = app.add_subcommand("afun", "a, Delta and n per element");
  auto dset = app.add_subcommand("dset", "distinguished involutions");
  auto gamma = app.add_subcommand("gamma", "gamma_{x,y,z}");
  auto jring = app.add_subcommand("jring", "structure constants of J");
  auto phi = app.add_subcommand("phi", "phi(c_x^dagger)");
  phi->add_option("x", x)->required();
  auto check = app.add_subcommand("check-conjectures", "P1-P15 and Ptilde on the window");
  check->add_option("--only", only, "comma-separated property ids");
  auto foldc = app.add_subcommand("fold", "quasisplit folding by a diagram automorphism");
  foldc->add_option("--u", u, "generator permutation, 1-based, e.g. 3,2,1")->required();
  auto sym = app.add_subcommand("symbols", "symbol combinatorics");
  sym->add_option("what", what)->required()->check(CLI::IsMember({"rank", "a", "hoefsmit", "families"}));
  sym->add_option("arg", arg, "symbol (0,2/1) or bipartition (2,1;1)");
  sym->add_option("--a", a)->check(CLI::PositiveNumber);
  sym->add_option("--b", b)->check(CLI::NonNegativeNumber);
  sym->add_option("--n", n)->check(CLI::NonNegativeNumber);
  auto odiff = app.add_subcommand("oracle-diff", "compare generic tables with dihedral closed forms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (c.threads > 0) omp_set_num_threads(c.threads);

  try {
    if (*klpoly) cmd_klpoly(c, y, w);
    else if (*cbasis) cmd_cbasis(c, w);
    else if (*mu) cmd_mu(c, s, y, w);
    else if (*htable) cmd_htable(c);
    else if (*cells) cmd_cells(c, kind);
    else if (*afun) cmd_afun(c);
    else if (*dset) cmd_dset(c);
    else if (*gamma) cmd_gamma(c);
    else if (*jring) cmd_jring(c);
    else if (*phi) cmd_phi(c, x);
    else if (*check) cmd_check(c, only);
    else if (*foldc) cmd_fold(c, u);
    else if (*sym) cmd_symbols(c, what, arg, a, b, n);
    else if (*odiff) cmd_oracle_diff(c);
  } catch (const CheckFailed&) {
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.name() == "UsageError" || e.name() == "ParseError" ? 2 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: ParseError: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
