#include "cli.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isopieri/bruhat.hpp"
#include "isopieri/diagram.hpp"
#include "isopieri/ktheory.hpp"
#include "isopieri/pieri.hpp"
#include "isopieri/poset_cache.hpp"
#include "isopieri/projection.hpp"
#include "isopieri/selfcheck.hpp"

namespace isopieri::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string type;
  int m = 0;
  int n = 0;
  std::string P, T, Q;
  int r = 0;
  bool tilde = false;
  bool raise = false;
  bool verbose = false;
  std::string format = "text";
  std::string cache_dir;
  bool no_cache = false;
  std::size_t max_symbols = kDefaultSymbolCap;
  int budget = kDefaultBudget;
};

std::vector<int> parse_ints(const std::string &flag, const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(' ');
    const auto e = tok.find_last_not_of(' ');
    if (b == std::string::npos)
      throw UsageError(flag + ": empty entry in '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != tok.size())
      throw UsageError(flag + ": '" + tok + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty())
    throw UsageError(flag + ": no entries");
  return out;
}

json to_json(const SchubertSymbol &P) {
  return std::vector<int>(P.elements().begin(), P.elements().end());
}

json to_json(const GrassmannianSpec &spec) {
  return {{"type", std::string(1, to_char(spec.lie_type))},
          {"m", spec.m}, {"n", spec.n}, {"N", spec.N}, {"k", spec.k}};
}

json to_json(const SpecialClass &s) { return {{"r", s.r}, {"tilde", s.tilde}}; }

template <class C> std::string set_text(const C &c) {
  std::string out = "{";
  for (auto it = c.begin(); it != c.end(); ++it)
    out += (it == c.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

std::filesystem::path default_cache_dir() {
  if (const char *d = std::getenv("ISOPIERI_CACHE_DIR"); d && *d)
    return d;
  if (const char *d = std::getenv("XDG_CACHE_HOME"); d && *d)
    return std::filesystem::path(d) / "isopieri";
  if (const char *d = std::getenv("HOME"); d && *d)
    return std::filesystem::path(d) / ".cache" / "isopieri";
  return {};
}

class Runner {
public:
  Runner(const Config &cfg, std::ostream &out, std::ostream &err)
      : cfg_(cfg), out_(out), err_(err) {}

  GrassmannianSpec spec() const {
    const char t = cfg_.type.size() == 1 ? static_cast<char>(std::toupper(cfg_.type[0])) : '?';
    if (t != 'B' && t != 'C' && t != 'D')
      throw UsageError("--type: expected B, C or D");
    return make_spec(lie_type_from_char(t), cfg_.m, cfg_.n);
  }

  SchubertSymbol symbol(const GrassmannianSpec &spec, const std::string &flag,
                        const std::string &text) const {
    return parse_symbol(spec, parse_ints(flag, text));
  }

  SpecialClass special(const GrassmannianSpec &spec) const {
    SpecialClass s{cfg_.r, cfg_.tilde};
    validate_special(spec, s);
    return s;
  }

  void require_format(std::initializer_list<const char *> allowed) const {
    for (const char *f : allowed)
      if (cfg_.format == f)
        return;
    std::string list;
    for (const char *f : allowed)
      list += (list.empty() ? "" : ", ") + std::string(f);
    throw UsageError("--format: '" + cfg_.format + "' is not one of " + list);
  }

  BruhatPoset poset(const GrassmannianSpec &spec) const {
    const std::filesystem::path dir =
        cfg_.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cfg_.cache_dir);
    if (cfg_.no_cache || dir.empty())
      return build_poset(spec, cfg_.max_symbols);
    CachedPoset cached = load_or_build(spec, dir, cfg_.max_symbols);
    for (const auto &w : cached.warnings)
      err_ << "warning: " << w << "\n";
    if (cfg_.verbose)
      err_ << "poset cache " << (cached.hit ? "hit" : "miss") << ": "
           << cache_path(dir, spec).string() << "\n";
    return std::move(cached.poset);
  }

  void symbols() {
    require_format({"text", "json"});
    const GrassmannianSpec s = spec();
    const auto list = enumerate_symbols(s);
    if (cfg_.format == "json") {
      json j;
      j["spec"] = to_json(s);
      j["symbols"] = json::array();
      for (const auto &P : list)
        j["symbols"].push_back(to_json(P));
      out_ << j.dump() << "\n";
      return;
    }
    for (const auto &P : list)
      out_ << P.to_string() << "\n";
  }

  void order() {
    const GrassmannianSpec s = spec();
    if (!cfg_.P.empty() || !cfg_.T.empty()) {
      require_format({"text", "json"});
      if (cfg_.P.empty() || cfg_.T.empty())
        throw UsageError("order: --P and --T go together");
      const SchubertSymbol P = symbol(s, "--P", cfg_.P);
      const SchubertSymbol T = symbol(s, "--T", cfg_.T);
      const bool l = leq(T, P);
      const bool p = preceq(s, T, P);
      if (cfg_.format == "json")
        out_ << json{{"T", to_json(T)}, {"P", to_json(P)}, {"leq", l}, {"preceq", p}}.dump()
             << "\n";
      else
        out_ << T.to_string() << " ⪯ " << P.to_string() << ": " << (p ? "true" : "false")
             << " (componentwise ≤: " << (l ? "true" : "false") << ")\n";
      return;
    }
    require_format({"text", "json", "dot"});
    const BruhatPoset poset = this->poset(s);
    const auto &sym = poset.symbols();
    if (cfg_.format == "dot") {
      out_ << hasse_to_dot(poset);
    } else if (cfg_.format == "json") {
      json j;
      j["spec"] = to_json(s);
      j["symbols"] = json::array();
      for (const auto &P : sym)
        j["symbols"].push_back(to_json(P));
      j["covers"] = json::array();
      for (const auto &e : poset.covers())
        j["covers"].push_back({e.lower, e.upper});
      j["rank"] = poset.ranks();
      out_ << j.dump() << "\n";
    } else {
      out_ << describe(s) << "\n";
      const int top = poset.rank(poset.minimum());
      for (int r = 0; r <= top; ++r) {
        out_ << "codim " << r << ":";
        for (std::size_t i = 0; i < poset.size(); ++i)
          if (poset.rank(i) == r)
            out_ << " " << sym[i].to_string();
        out_ << "\n";
      }
      out_ << "covers:\n";
      for (const auto &e : poset.covers())
        out_ << "  " << sym[e.lower].to_string() << " ⋖ " << sym[e.upper].to_string() << "\n";
    }
  }

  void diagram() {
    require_format({"text", "json"});
    const GrassmannianSpec s = spec();
    const SchubertSymbol P = symbol(s, "--P", cfg_.P);
    const SchubertSymbol T = symbol(s, "--T", cfg_.T);
    const DiagramReport d = analyze(s, P, T);
    const bool rel = preceq(s, T, P);
    std::optional<bool> conflict, window;
    if (s.lie_type == LieType::D) {
      if (P != T)
        conflict = conflicting_lone_stars(s, P, T);
      if (type_of(s, P) != type_of(s, T))
        window = has_critical_window(s, P, T);
    }
    if (cfg_.format == "json") {
      json j;
      j["P"] = to_json(P);
      j["T"] = to_json(T);
      j["rows"] = json::array();
      for (const auto &[lo, hi] : d.rows)
        j["rows"].push_back({lo, hi});
      j["visible_cuts"] = d.visible_cuts;
      j["apparent_cuts"] = d.apparent_cuts;
      j["exceptional_cuts"] = d.exceptional_cuts;
      j["cuts"] = d.cuts;
      j["zero_columns"] = d.zero_columns;
      j["lone_stars"] = json::array();
      for (const auto &ls : d.lone_stars)
        j["lone_stars"].push_back({ls.row, ls.column});
      j["L"] = d.linear;
      j["Q"] = d.quad;
      j["preceq"] = rel;
      if (rel)
        j["arrow"] = arrow(s, P, T);
      if (conflict)
        j["conflicting_lone_stars"] = *conflict;
      if (window)
        j["critical_window"] = *window;
      out_ << j.dump() << "\n";
      return;
    }
    out_ << render_ascii(d);
    out_ << "visible cuts: " << set_text(d.visible_cuts) << "\n";
    out_ << "apparent cuts: " << set_text(d.apparent_cuts) << "\n";
    if (s.lie_type == LieType::D)
      out_ << "exceptional cuts: " << set_text(d.exceptional_cuts) << "\n";
    out_ << "cuts: " << set_text(d.cuts) << "\n";
    out_ << "zero columns: " << set_text(d.zero_columns) << "\n";
    out_ << "lone stars:";
    for (const auto &ls : d.lone_stars)
      out_ << " (" << ls.row << "," << ls.column << ")";
    out_ << "\n";
    out_ << "L: " << set_text(d.linear) << "\n";
    out_ << "Q: " << set_text(d.quad) << "\n";
    out_ << "T ⪯ P: " << (rel ? "true" : "false") << "\n";
    if (rel)
      out_ << "P → T: " << (arrow(s, P, T) ? "true" : "false") << "\n";
    if (conflict)
      out_ << "conflicting lone stars: " << (*conflict ? "true" : "false") << "\n";
    if (window)
      out_ << "critical window: " << (*window ? "true" : "false") << "\n";
  }

  void zdata() {
    require_format({"text", "json"});
    const GrassmannianSpec s = spec();
    const SchubertSymbol P = symbol(s, "--P", cfg_.P);
    const SchubertSymbol T = symbol(s, "--T", cfg_.T);
    const ZData z = z_data(s, P, T);
    if (cfg_.format == "json") {
      json j;
      j["linear"] = z.linear;
      j["quadratic_gaps"] = json::array();
      for (const auto &[c, d] : z.quad_gaps)
        j["quadratic_gaps"].push_back({c, d});
      j["l"] = z.l;
      j["q"] = z.q;
      out_ << j.dump() << "\n";
      return;
    }
    out_ << "linear: " << set_text(z.linear) << "\n";
    out_ << "quadratic gaps:";
    for (const auto &[c, d] : z.quad_gaps)
      out_ << " (" << c << "," << d << ")";
    out_ << "\n";
    out_ << "l = " << z.l << ", q = " << z.q << "\n";
    out_ << "[O_Z] = " << z_class(s, z).to_string() << "\n";
    if (s.lie_type == LieType::D) {
      const SSets ss = s_sets(s, P, T);
      out_ << "S: " << set_text(ss.S) << "\n";
      out_ << "S': " << set_text(ss.S_prime) << "\n";
      if (z.q == 0 && z.l == s.n + 1)
        out_ << "t(Z) = " << z_type(s, P, T) << "\n";
    }
  }

  void shrink_cmd() {
    require_format({"text", "json"});
    const GrassmannianSpec s = spec();
    const SchubertSymbol P = symbol(s, "--P", cfg_.P);
    const SchubertSymbol T = symbol(s, "--T", cfg_.T);
    const SchubertSymbol result = cfg_.raise ? raise(s, P, T) : shrink(s, P, T);
    if (cfg_.format == "json")
      out_ << json{{cfg_.raise ? "raised" : "shrunk", to_json(result)}}.dump() << "\n";
    else
      out_ << result.to_string() << "\n";
  }

  int triple() {
    require_format({"text", "json"});
    const GrassmannianSpec s = spec();
    const SchubertSymbol P = symbol(s, "--P", cfg_.P);
    const SchubertSymbol T = symbol(s, "--T", cfg_.T);
    const SpecialClass sp = special(s);
    const ZData z = z_data(s, P, T);
    const std::int64_t per_type = triple_intersection(s, P, T, sp);
    const std::int64_t unified = triple_intersection_unified(s, P, T, sp);
    const std::int64_t printed = triple_intersection_printed(s, P, T, sp);
    const bool mismatch = per_type != unified;
    if (cfg_.format == "json") {
      out_ << json{{"P", to_json(P)},          {"T", to_json(T)},
                   {"special", to_json(sp)},   {"l", z.l},
                   {"q", z.q},                 {"per_type", per_type},
                   {"unified", unified},       {"printed", printed},
                   {"mismatch", mismatch}}
                  .dump()
           << "\n";
    } else {
      out_ << "per-type: " << per_type << "\n";
      out_ << "unified: " << unified << "\n";
      out_ << "printed: " << printed << "\n";
      if (printed != unified)
        out_ << "note: the printed unified formula differs here (erratum)\n";
      if (mismatch)
        out_ << "MISMATCH: per-type and unified formulas disagree\n";
    }
    return mismatch ? 1 : 0;
  }

  void pieri() {
    const GrassmannianSpec s = spec();
    const SpecialClass sp = special(s);
    if (!cfg_.Q.empty() && cfg_.P.empty())
      throw UsageError("pieri: --Q needs --P");
    const BruhatPoset poset = this->poset(s);

    if (!cfg_.Q.empty()) {
      require_format({"text", "json"});
      const SchubertSymbol P = symbol(s, "--P", cfg_.P);
      const SchubertSymbol Q = symbol(s, "--Q", cfg_.Q);
      const std::int64_t c = pieri_coefficient(poset, P, Q, sp);
      if (cfg_.format == "json")
        out_ << json{{"P", to_json(P)}, {"Q", to_json(Q)}, {"special", to_json(sp)},
                     {"value", c}}
                    .dump()
             << "\n";
      else
        out_ << c << "\n";
      return;
    }

    if (!cfg_.P.empty()) {
      require_format({"text", "json", "csv"});
      const SchubertSymbol P = symbol(s, "--P", cfg_.P);
      const PieriRow row = pieri_row(poset, P, sp);
      if (cfg_.format == "json") {
        json j;
        j["P"] = to_json(P);
        j["special"] = to_json(sp);
        j["coefficients"] = json::array();
        for (const auto &[Q, c] : row.coefficients)
          j["coefficients"].push_back({{"Q", to_json(Q)}, {"codim", codim(poset, Q)},
                                       {"value", c}});
        out_ << j.dump() << "\n";
      } else if (cfg_.format == "csv") {
        out_ << "Q,codim,value\n";
        for (const auto &[Q, c] : row.coefficients)
          out_ << "\"" << Q.to_string() << "\"," << codim(poset, Q) << "," << c << "\n";
      } else {
        for (const auto &[Q, c] : row.coefficients)
          out_ << Q.to_string() << " (codim " << codim(poset, Q) << "): " << c << "\n";
      }
      return;
    }

    require_format({"text", "json", "csv"});
    const PosetMatrices mats = build_matrices(poset, sp);
    if (cfg_.format == "json") {
      out_ << matrices_to_json(poset, mats);
    } else if (cfg_.format == "csv") {
      out_ << matrices_to_csv(poset, mats);
    } else {
      const auto &sym = poset.symbols();
      for (std::size_t i = 0; i < sym.size(); ++i) {
        out_ << sym[i].to_string() << " · " << sp.to_string() << " =";
        bool any = false;
        for (std::size_t j = 0; j < sym.size(); ++j)
          if (mats.C(i, j) != 0) {
            out_ << " " << (any && mats.C(i, j) > 0 ? "+" : "") << mats.C(i, j) << "·"
                 << sym[j].to_string();
            any = true;
          }
        out_ << (any ? "" : " 0") << "\n";
      }
    }
  }

  int selfcheck(bool single) {
    require_format({"text"});
    std::vector<GrassmannianSpec> specs;
    if (single)
      specs.push_back(spec());
    else
      specs = specs_up_to(cfg_.budget);
    const SelfcheckReport report = run_selfcheck(specs, [&](const std::string &what) {
      if (cfg_.verbose)
        err_ << "checking " << what << "\n";
    });
    out_ << report.summary();
    return report.ok() ? 0 : 1;
  }

private:
  const Config &cfg_;
  std::ostream &out_;
  std::ostream &err_;
};

void add_space(CLI::App *sub, Config &cfg, bool required = true) {
  auto *t = sub->add_option("--type", cfg.type, "Lie type: B, C or D");
  auto *m = sub->add_option("--m", cfg.m, "plane dimension m");
  auto *n = sub->add_option("--n", cfg.n, "rank parameter n");
  if (required) {
    t->required();
    m->required();
    n->required();
  }
  sub->add_option("--format", cfg.format, "output format");
}

void add_cache(CLI::App *sub, Config &cfg) {
  sub->add_option("--cache-dir", cfg.cache_dir, "poset cache directory");
  sub->add_flag("--no-cache", cfg.no_cache, "always rebuild the poset");
  sub->add_option("--max-symbols", cfg.max_symbols, "refuse posets larger than this");
  sub->add_flag("--verbose", cfg.verbose, "report cache use on stderr");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Config cfg;
  CLI::App app{"Exact K-theoretic Pieri coefficients on isotropic Grassmannians",
               "isopieri"};
  app.require_subcommand(1);

  auto *symbols = app.add_subcommand("symbols", "list the Schubert symbols");
  add_space(symbols, cfg);

  auto *order = app.add_subcommand("order", "query T ⪯ P, or print the Hasse diagram");
  add_space(order, cfg);
  order->add_option("--P", cfg.P, "upper symbol, comma separated");
  order->add_option("--T", cfg.T, "lower symbol, comma separated");
  add_cache(order, cfg);

  auto *diagram = app.add_subcommand("diagram", "Richardson diagram D(P,T) and its cuts");
  add_space(diagram, cfg);
  diagram->add_option("--P", cfg.P)->required();
  diagram->add_option("--T", cfg.T)->required();

  auto *zdata = app.add_subcommand("zdata", "equations of the projected Richardson variety");
  add_space(zdata, cfg);
  zdata->add_option("--P", cfg.P)->required();
  zdata->add_option("--T", cfg.T)->required();

  auto *shrink = app.add_subcommand("shrink", "lower P keeping Z_{P,T} and making P → T");
  add_space(shrink, cfg);
  shrink->add_option("--P", cfg.P)->required();
  shrink->add_option("--T", cfg.T)->required();
  shrink->add_flag("--raise", cfg.raise, "raise T instead, by rotation");

  auto *triple = app.add_subcommand("triple", "triple intersection number");
  add_space(triple, cfg);
  triple->add_option("--P", cfg.P)->required();
  triple->add_option("--T", cfg.T)->required();
  triple->add_option("--r", cfg.r, "special class codimension")->required();
  triple->add_flag("--tilde", cfg.tilde, "type D tilde class (r = k)");

  auto *pieri = app.add_subcommand("pieri", "Pieri coefficient, row, or full table");
  add_space(pieri, cfg);
  pieri->add_option("--P", cfg.P);
  pieri->add_option("--Q", cfg.Q);
  pieri->add_option("--r", cfg.r, "special class codimension")->required();
  pieri->add_flag("--tilde", cfg.tilde, "type D tilde class (r = k)");
  add_cache(pieri, cfg);

  auto *selfcheck = app.add_subcommand("selfcheck", "run the invariant suites");
  add_space(selfcheck, cfg, false);
  selfcheck->add_option("--budget", cfg.budget,
                        "check every spec with N at most this")
      ->check(CLI::Range(2, 16));
  selfcheck->add_flag("--verbose", cfg.verbose, "report progress on stderr");

  std::vector<const char *> argv{"isopieri"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return 2;
  }

  Runner runner(cfg, out, err);
  try {
    if (*symbols)
      runner.symbols();
    else if (*order)
      runner.order();
    else if (*diagram)
      runner.diagram();
    else if (*zdata)
      runner.zdata();
    else if (*shrink)
      runner.shrink_cmd();
    else if (*triple)
      return runner.triple();
    else if (*pieri)
      runner.pieri();
    else if (*selfcheck) {
      const bool single = !cfg.type.empty() || cfg.m != 0 || cfg.n != 0;
      return runner.selfcheck(single);
    }
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace isopieri::cli
