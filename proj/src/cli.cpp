#include "p1gw/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "p1gw/errors.hpp"
#include "p1gw/render.hpp"

namespace p1gw {

namespace {

struct GlobalFlags {
  std::optional<int> depth;
  bool no_stability = false;
  int jobs = 1;
  std::string cache_dir;
  std::string format = "markdown";

  EngineOptions engine() const { return {depth, !no_stability, jobs}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

std::optional<ResolventCache> open_cache(const GlobalFlags& flags, std::ostream& err) {
  std::string dir = flags.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("P1GW_CACHE_DIR")) dir = env;
  }
  if (dir.empty()) return std::nullopt;
  ResolventCache cache(dir);
  try {
    if (auto bundle = cache.load()) seed_shared_resolvent(std::make_shared<const ResolventBundle>(std::move(*bundle)));
  } catch (const CacheCorrupt& e) {
    err << "warning: ignoring resolvent cache (" << e.what() << "); rebuilding\n";
  }
  return cache;
}

void save_cache(const std::optional<ResolventCache>& cache, std::ostream& err) {
  if (!cache) return;
  if (auto deepest = deepest_shared_resolvent()) {
    try {
      cache->store(*deepest);
    } catch (const std::exception& e) {
      err << "warning: could not write resolvent cache: " << e.what() << '\n';
    }
  }
}

int run_correlator(const std::vector<int>& ks, const GlobalFlags& flags, std::ostream& out) {
  require(!ks.empty() && ks.size() <= 8, "correlator takes between 1 and 8 insertion indices");
  for (int k : ks) require(k >= 0, "insertion indices must be non-negative");
  out << render_record(correlator(ks, flags.engine()), parse_format(flags.format));
  return kExitOk;
}

int run_table(int b, int n_max, int n_min, std::optional<int> g_max, const GlobalFlags& flags, std::ostream& out) {
  require(b >= 0 && b <= 6, "--b must lie in [0, 6]");
  require(n_min >= 1 && n_min <= n_max, "need 1 <= --n-min <= --n-max");
  require(n_max <= (b == 0 ? 8 : 12), b == 0 ? "--n-max is at most 8 for b = 0" : "--n-max is at most 12");
  const int top_genus = b * n_max / 2 + 1;
  const int columns = g_max.value_or(std::min(top_genus, 6));
  require(columns >= 0, "--g-max must be non-negative");
  out << render_table(polygon_table(b, n_max, columns, n_min, flags.engine()), parse_format(flags.format));
  return kExitOk;
}

int run_hurwitz(int g_max, int d_max, const GlobalFlags& flags, std::ostream& out) {
  require(g_max >= 0 && d_max >= 1, "need --g-max >= 0 and --d-max >= 1");
  const int n_max = 2 * g_max + 2 * d_max - 2;
  require(n_max <= 12, "2 g_max + 2 d_max - 2 must be at most 12");
  HurwitzGrid grid{g_max, d_max, {}};
  const PolygonTable t = polygon_table(1, std::max(n_max, 2), g_max, 2, flags.engine());
  for (int g = 0; g <= g_max; ++g) {
    std::vector<std::optional<Rational>> row;
    for (int d = 1; d <= d_max; ++d) {
      const int n = 2 * g + 2 * d - 2;
      if (n >= 2) {
        row.emplace_back(t.row(n)->by_genus[static_cast<std::size_t>(g)]);
      } else {
        row.emplace_back(std::nullopt);
      }
    }
    grid.values.push_back(std::move(row));
  }
  out << render_hurwitz(grid, parse_format(flags.format));
  return kExitOk;
}

int run_verify(const std::string& suite, const GlobalFlags& flags, std::ostream& out) {
  const VerifyReport report = run_verify_suite(suite, flags.engine());
  out << verify_to_json(report).dump(2) << '\n';
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int run_asymptotics(int k, int d, int g_max, const GlobalFlags& flags, std::ostream& out) {
  require(k >= 0 && d >= 1, "need --k >= 0 and --d >= 1");
  require(!(k == 1 && d == 1), "the k = 1 asymptotic requires --d >= 2");
  require(g_max >= 0 && g_max <= 40, "--g-max must lie in [0, 40]");
  out << render_asymptotics(asymptotic_report(k, d, g_max), parse_format(flags.format));
  return kExitOk;
}

int run_resolvent(const GlobalFlags& flags, std::ostream& out) {
  const int depth = flags.depth.value_or(8);
  out << render_resolvent(*shared_resolvent(depth), parse_format(flags.format));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stationary Gromov-Witten invariants of P^1 in exact arithmetic"};
  app.name("p1gw");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--depth", flags.depth, "lambda-depth of the resolvent (>= 4)")->check(CLI::Range(4, 100000));
  app.add_flag("--no-stability", flags.no_stability, "skip the depth + 4 stability recheck");
  app.add_option("--jobs", flags.jobs, "worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--cache-dir", flags.cache_dir, "resolvent cache directory (default: $P1GW_CACHE_DIR)");
  app.add_option("--format", flags.format, "json | csv | markdown | latex")
      ->check(CLI::IsMember({"json", "csv", "markdown", "latex"}));

  std::vector<int> insertions;
  auto* cmd_correlator = app.add_subcommand("correlator", "one correlator <tau_k1 ... tau_kn>");
  cmd_correlator->add_option("k", insertions, "insertion indices")->required();

  int b = 0, n_max = 0, n_min = 2;
  std::optional<int> table_g_max;
  auto* cmd_table = app.add_subcommand("table", "table of <tau_b^n>_{g,d}");
  cmd_table->add_option("--b", b)->required();
  cmd_table->add_option("--n-max", n_max)->required();
  cmd_table->add_option("--n-min", n_min);
  cmd_table->add_option("--g-max", table_g_max);

  int h_g_max = 3, h_d_max = 4;
  auto* cmd_hurwitz = app.add_subcommand("hurwitz", "Hurwitz numbers H_{g,d}");
  cmd_hurwitz->add_option("--g-max", h_g_max);
  cmd_hurwitz->add_option("--d-max", h_d_max);

  std::string suite;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  cmd_verify->add_option("suite", suite)->required()->check(CLI::IsMember(verify_suites()));

  int a_k = 0, a_d = 1, a_g_max = 10;
  auto* cmd_asym = app.add_subcommand("asymptotics", "large-genus ratios of two-point correlators");
  cmd_asym->add_option("--k", a_k)->required();
  cmd_asym->add_option("--d", a_d)->required();
  cmd_asym->add_option("--g-max", a_g_max);

  auto* cmd_resolvent = app.add_subcommand("resolvent", "dump R(lambda; eps) through lambda^-depth");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  const auto cache = open_cache(flags, err);
  try {
    int code = kExitOk;
    if (cmd_correlator->parsed()) code = run_correlator(insertions, flags, out);
    if (cmd_table->parsed()) code = run_table(b, n_max, n_min, table_g_max, flags, out);
    if (cmd_hurwitz->parsed()) code = run_hurwitz(h_g_max, h_d_max, flags, out);
    if (cmd_verify->parsed()) code = run_verify(suite, flags, out);
    if (cmd_asym->parsed()) code = run_asymptotics(a_k, a_d, a_g_max, flags, out);
    if (cmd_resolvent->parsed()) code = run_resolvent(flags, out);
    save_cache(cache, err);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MalformedValue& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IdentityViolation& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnstable;
  }
}

}  // namespace p1gw
