#include "macd/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "macd/identities.hpp"
#include "macd/macdonald.hpp"
#include "macd/operators.hpp"

namespace macd::cli {

namespace {

using nlohmann::json;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr int kMaxRank = 8;

Weight dominant_weight(const std::string& text, int n, const char* name) {
  Weight w = [&] {
    try {
      return Weight::parse(text);
    } catch (const std::exception& e) {
      throw InvalidInput(std::string("malformed --") + name + " '" + text + "': " + e.what());
    }
  }();
  if (w.rank() != n)
    throw InvalidInput(std::string("--") + name + " has " + std::to_string(w.rank()) +
                       " coordinates, expected n=" + std::to_string(n));
  if (!w.is_dominant()) throw InvalidInput(std::string("--") + name + " = " + text + " is not dominant");
  return w;
}

Weight required_weight(const std::optional<std::string>& text, int n, const char* name) {
  if (!text) throw InvalidInput(std::string("--") + name + " is required");
  return dominant_weight(*text, n, name);
}

void validate(const CliConfig& cfg) {
  if (cfg.n < 2 || cfg.n > kMaxRank)
    throw InvalidInput("--n must be in 2.." + std::to_string(kMaxRank) + ", got " + std::to_string(cfg.n));
  if (cfg.k < 1) throw InvalidInput("--k must be >= 1, got " + std::to_string(cfg.k));
  if (cfg.r && (*cfg.r < 1 || *cfg.r > cfg.n - 1))
    throw InvalidInput("--r must be in 1..n-1, got " + std::to_string(*cfg.r));
  if (cfg.max_size < 0) throw InvalidInput("--max-size must be >= 0");
  if (cfg.format != "text" && cfg.format != "json") throw InvalidInput("--format must be text or json");
}

std::filesystem::path resolve_cache_dir(const CliConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
  return kDefaultCacheDir;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int n, int k) {
  return dir / ("macd_n" + std::to_string(n) + "_k" + std::to_string(k) + ".json");
}

void load_cache(const MacdonaldContext& ctx, const std::filesystem::path& file, std::ostream& err) {
  std::ifstream in(file);
  if (!in) return;
  try {
    ctx.load_cache(json::parse(in));
  } catch (const std::exception& e) {
    err << "warning: ignoring cache " << file.string() << ": " << e.what() << "\n";
  }
}

void save_cache(const MacdonaldContext& ctx, const std::filesystem::path& file, std::ostream& err) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  const auto tmp = file.string() + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) {
      err << "warning: cannot write cache " << file.string() << "\n";
      return;
    }
    os << ctx.cache_to_json().dump() << "\n";
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) err << "warning: cannot write cache " << file.string() << ": " << ec.message() << "\n";
}

int cmd_poly(const CliConfig& cfg, const MacdonaldContext& ctx, std::ostream& out) {
  const Weight lam = required_weight(cfg.lambda, cfg.n, "lambda");
  const auto& entry = macdonald_entry(lam, ctx);
  if (cfg.format == "json") {
    json coeffs = json::object();
    for (const auto& [mu, c] : entry.coefficients) coeffs[mu.to_string()] = c.to_string();
    out << json{{"n", cfg.n}, {"k", cfg.k}, {"lambda", lam.to_string()}, {"coeffs", coeffs}}.dump() << "\n";
    return 0;
  }
  out << "P[" << lam.to_string() << "]  n=" << cfg.n << " k=" << cfg.k << "\n";
  // highest weight first
  for (auto it = entry.coefficients.rbegin(); it != entry.coefficients.rend(); ++it)
    out << "  m[" << it->first.to_string() << "]: " << it->second.to_string() << "\n";
  return 0;
}

int cmd_eval(const CliConfig& cfg, const MacdonaldContext& ctx, std::ostream& out) {
  const Weight lam = required_weight(cfg.lambda, cfg.n, "lambda");
  const Weight mu = required_weight(cfg.mu, cfg.n, "mu");
  const ExactScalar v = evaluate_poly(lam, mu + cfg.k * ctx.roots().rho, ctx);
  if (cfg.format == "json") {
    out << json{{"n", cfg.n},
                {"k", cfg.k},
                {"lambda", lam.to_string()},
                {"mu", mu.to_string()},
                {"value", v.to_string()}}
               .dump()
        << "\n";
  } else {
    out << "P[" << lam.to_string() << "](q^{2(mu+k rho)}), mu=" << mu.to_string() << ": " << v.to_string()
        << "\n";
  }
  return 0;
}

int report_exit(const VerificationReport& rep) {
  if (rep.invalid) return static_cast<int>(ExitCode::invalid_input);
  return rep.equal || rep.skipped ? 0 : static_cast<int>(ExitCode::identity_failed);
}

int cmd_verify(const CliConfig& cfg, const MacdonaldContext& ctx, std::ostream& out, std::ostream& err) {
  const auto id = parse_identity(cfg.identity);
  if (!id) throw InvalidInput("unknown identity '" + cfg.identity + "'");
  VerifyParams p;
  p.n = cfg.n;
  p.k = cfg.k;
  if (cfg.lambda) p.lambda = dominant_weight(*cfg.lambda, cfg.n, "lambda");
  if (cfg.mu) p.mu = dominant_weight(*cfg.mu, cfg.n, "mu");
  p.r = cfg.r;
  const VerificationReport rep = verify(*id, p, ctx);
  if (rep.invalid) {
    err << "error: " << rep.error << "\n";
    return report_exit(rep);
  }
  if (cfg.format == "json") {
    out << rep.to_json().dump() << "\n";
  } else {
    out << identity_name(rep.identity) << ": "
        << (rep.skipped ? "skipped" : rep.equal ? "equal" : "NOT equal") << "\n";
    if (!rep.error.empty()) out << "  note: " << rep.error << "\n";
    out << "  lhs = " << rep.lhs << "\n  rhs = " << rep.rhs << "\n";
  }
  return report_exit(rep);
}

int cmd_grid(const CliConfig& cfg, const MacdonaldContext& ctx, std::ostream& out) {
  GridOptions opt;
  opt.n = cfg.n;
  opt.k = cfg.k;
  opt.max_size = cfg.max_size;
  opt.threads = cfg.threads;
  for (const auto& name : cfg.identities) {
    const auto id = parse_identity(name);
    if (!id) throw InvalidInput("unknown identity '" + name + "'");
    opt.identities.push_back(*id);
  }
  const GridSummary summary = run_grid(opt, ctx);
  if (cfg.format == "json") {
    json j = summary.to_json();
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["max_size"] = cfg.max_size;
    json failures = json::array();
    for (const auto& rep : summary.reports)
      if (!rep.equal && !rep.skipped) failures.push_back(rep.to_json());
    j["failures"] = std::move(failures);
    out << j.dump() << "\n";
  } else {
    out << "grid n=" << cfg.n << " k=" << cfg.k << " max-size=" << cfg.max_size << "\n";
    const json per = summary.to_json()["identities"];
    for (const auto& [name, counts] : per.items())
      out << "  " << name << ": " << counts["passed"] << " passed, " << counts["failed"] << " failed, "
          << counts["skipped"] << " skipped\n";
    for (const auto& rep : summary.reports)
      if (!rep.equal && !rep.skipped) out << "  FAIL " << rep.to_json().dump() << "\n";
    out << "total: " << summary.passed << " passed, " << summary.failed << " failed, " << summary.skipped
        << " skipped\n";
  }
  return summary.failed == 0 ? 0 : static_cast<int>(ExitCode::identity_failed);
}

int cmd_table(const CliConfig& cfg, const MacdonaldContext& ctx, std::ostream& out) {
  const Weight mu = required_weight(cfg.mu, cfg.n, "mu");
  std::vector<int> rs;
  if (cfg.r)
    rs.push_back(*cfg.r);
  else
    for (int r = 1; r < cfg.n; ++r) rs.push_back(r);
  json rows = json::array();
  for (int r : rs)
    for (const auto& term : pieri_expand(mu, r, ctx))
      rows.push_back({{"r", r},
                      {"nu", term.nu.to_string()},
                      {"target", (mu + term.nu).to_string()},
                      {"coefficient", term.coefficient.to_string()}});
  if (cfg.format == "json") {
    out << json{{"n", cfg.n}, {"k", cfg.k}, {"mu", mu.to_string()}, {"terms", rows}}.dump() << "\n";
    return 0;
  }
  out << "X_r P[" << mu.to_string() << "]  n=" << cfg.n << " k=" << cfg.k << "\n";
  for (const auto& row : rows)
    out << "  r=" << row["r"].get<int>() << "  P[" << row["target"].get<std::string>()
        << "]: " << row["coefficient"].get<std::string>() << "\n";
  return 0;
}

void add_common(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--n", cfg.n, "rank + 1 (A_{n-1})");
  sub->add_option("--k", cfg.k, "k >= 1, t = q^k");
  sub->add_option("--format", cfg.format, "text or json");
  sub->add_option("--cache-dir", cfg.cache_dir, "cache directory (default: $MACD_CACHE_DIR or .macd-cache)");
  sub->add_flag("--no-cache", cfg.no_cache, "neither read nor write the cache");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;

  CLI::App app{"Exact Macdonald polynomials P_lambda(q, q^k) for A_{n-1}", "macd"};
  app.require_subcommand(1);

  auto* poly = app.add_subcommand("poly", "print P_lambda in the orbit-sum basis");
  add_common(poly, cfg);
  poly->add_option("--lambda", cfg.lambda, "dominant weight, e.g. 2,1,0")->required();

  auto* eval = app.add_subcommand("eval", "print P_lambda(q^{2(mu + k rho)})");
  add_common(eval, cfg);
  eval->add_option("--lambda", cfg.lambda)->required();
  eval->add_option("--mu", cfg.mu)->required();

  auto* ver = app.add_subcommand("verify", "check one identity");
  add_common(ver, cfg);
  ver->add_option("identity", cfg.identity, "identity name")->required();
  ver->add_option("--lambda", cfg.lambda);
  ver->add_option("--mu", cfg.mu);
  ver->add_option("--r", cfg.r);

  auto* grid = app.add_subcommand("grid", "verify identities over all dominant weights up to a size");
  add_common(grid, cfg);
  grid->add_option("--max-size", cfg.max_size, "bound on |lambda|, |mu|");
  grid->add_option("--identity", cfg.identities, "restrict to these identities (repeatable)");
  grid->add_option("--threads", cfg.threads, "worker threads");

  auto* table = app.add_subcommand("table", "print Pieri coefficients of X_r P_mu");
  add_common(table, cfg);
  table->add_option("--mu", cfg.mu)->required();
  table->add_option("--r", cfg.r);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::invalid_input);
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    validate(cfg);
    const MacdonaldContext ctx(cfg.n, cfg.k);
    const auto file = cache_file(resolve_cache_dir(cfg), cfg.n, cfg.k);
    if (!cfg.no_cache) load_cache(ctx, file, err);
    const std::size_t before = ctx.cache_size();

    int code = 0;
    if (cfg.subcommand == "poly")
      code = cmd_poly(cfg, ctx, out);
    else if (cfg.subcommand == "eval")
      code = cmd_eval(cfg, ctx, out);
    else if (cfg.subcommand == "verify")
      code = cmd_verify(cfg, ctx, out, err);
    else if (cfg.subcommand == "grid")
      code = cmd_grid(cfg, ctx, out);
    else
      code = cmd_table(cfg, ctx, out);

    if (!cfg.no_cache && ctx.cache_size() != before) save_cache(ctx, file, err);
    return code;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::invalid_input);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::invalid_input);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::invalid_input);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::identity_failed);
  }
}

}  // namespace macd::cli
