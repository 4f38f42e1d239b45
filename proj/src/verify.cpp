#include "p1gw/verify.hpp"

#include <algorithm>
#include <numeric>

#include "p1gw/errors.hpp"
#include "p1gw/oracles.hpp"
#include "p1gw/recursion.hpp"
#include "p1gw/reference_data.hpp"
#include "p1gw/resolvent.hpp"

namespace p1gw {

namespace {

constexpr int kMaxTableWeight = 16;
constexpr int kHurwitzRows = 12;

int table_n_max(int b) { return b == 1 ? kHurwitzRows : kMaxTableWeight / b; }

std::string describe(const std::vector<int>& ks) {
  std::string s = "<";
  for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? " tau_" : "tau_") + std::to_string(ks[i]);
  return s + ">";
}

}  // namespace

std::vector<std::vector<int>> acceptance_correlators() {
  std::vector<std::vector<int>> out;
  for (const auto& f : reference::flagship_correlators()) out.push_back(f.insertions);
  for (const auto& table : reference::polygon_tables()) {
    for (const auto& row : table.rows) {
      if (row.n < 2 || row.n > table_n_max(table.b)) continue;
      std::vector<int> ks(static_cast<std::size_t>(row.n), table.b);
      if (std::find(out.begin(), out.end(), ks) == out.end()) out.push_back(std::move(ks));
    }
  }
  return out;
}

namespace {

// Equal insertions go through the table route, which is much cheaper for long lists.
EpsLaurent evaluate(const std::vector<int>& ks, const EngineOptions& options) {
  const bool equal = std::all_of(ks.begin(), ks.end(), [&](int k) { return k == ks.front(); });
  if (equal && ks.size() >= 2) {
    const int n = static_cast<int>(ks.size());
    return polygon_table(ks.front(), n, 0, n, options).rows.front().value;
  }
  return correlator(ks, options).value;
}

}  // namespace

VerifyReport verify_identities(int depth) {
  VerifyReport r{"identities", 0, {}, {}};
  for (IdentityId id : all_identities()) {
    ++r.checks;
    try {
      identity_check(id, depth);
    } catch (const IdentityViolation& e) {
      r.failures.emplace_back(e.what());
    }
  }
  return r;
}

VerifyReport verify_degree1(const EngineOptions& options) {
  VerifyReport r{"degree1", 0, {}, {}};
  for (const auto& ks : acceptance_correlators()) {
    const int total = std::accumulate(ks.begin(), ks.end(), 0);
    if (total % 2 != 0) continue;
    ++r.checks;
    const Rational got = eps_coeff(evaluate(ks, options), total - 2);  // g = total / 2, d = 1
    const Rational want = degree_one(ks);
    if (got != want) {
      r.failures.push_back(describe(ks) + " degree 1: got " + to_string(got) + ", expected " + to_string(want));
    }
  }
  return r;
}

VerifyReport verify_tables(const EngineOptions& options) {
  VerifyReport r{"tables", 0, {}, {}};
  for (const auto& table : reference::polygon_tables()) {
    const int n_max = table_n_max(table.b);
    const int g_max = static_cast<int>(table.rows.front().by_genus.size()) - 1;
    const int n_min = table.rows.front().n;
    const PolygonTable ours = polygon_table(table.b, n_max, g_max, n_min, options);
    for (const auto& row : table.rows) {
      if (row.n > n_max) continue;
      const auto* mine = ours.row(row.n);
      std::string diffs;
      for (std::size_t g = 0; g < row.by_genus.size(); ++g) {
        if (mine->by_genus[g] == row.by_genus[g]) continue;
        diffs += " g=" + std::to_string(g) + " printed " + to_string(row.by_genus[g]) + " computed " +
                 to_string(mine->by_genus[g]);
      }
      const std::string where = "b=" + std::to_string(table.b) + " n=" + std::to_string(row.n);
      if (reference::is_known_conflict(table.b, row.n)) {
        r.known_conflicts.push_back(where + (diffs.empty() ? " (agrees)" : ":" + diffs));
        continue;
      }
      r.checks += static_cast<int>(row.by_genus.size());
      if (!diffs.empty()) r.failures.push_back(where + ":" + diffs);
    }
  }
  // <tau_0^n> is 1 at (g, d) = (0, 1) and zero otherwise.
  const PolygonTable primary = polygon_table(0, 6, 3, 2, options);
  for (const auto& row : primary.rows) {
    ++r.checks;
    if (row.value != EpsLaurent::monomial(1, -2)) {
      r.failures.push_back("b=0 n=" + std::to_string(row.n) + ": got " + row.value.to_string());
    }
  }
  return r;
}

VerifyReport verify_stability(const EngineOptions& options) {
  VerifyReport r{"stability", 0, {}, {}};
  std::vector<std::vector<int>> cases;
  for (const auto& f : reference::flagship_correlators()) cases.push_back(f.insertions);
  for (std::vector<int> extra : {std::vector<int>{0, 4}, {3, 5}, {2, 2, 4}, {1, 3, 4}, {0, 1, 2, 3}}) {
    cases.push_back(extra);
  }
  for (const auto& ks : cases) {
    ++r.checks;
    const int d = options.depth_override.value_or(default_depth(ks));
    try {
      stability_check(ks, d, d + 4, options.jobs);
    } catch (const Error& e) {
      r.failures.push_back(describe(ks) + ": " + e.what());
    }
  }
  return r;
}

VerifyReport verify_determinant(int depth) {
  VerifyReport r{"determinant", 0, {}, {}};
  const auto bundle = shared_resolvent(depth);
  const LambdaSeries tr = mat_trace(bundle->r);
  const LambdaSeries det = resolvent_determinant(*bundle);
  for (int e = 0; e >= -depth; --e) {
    r.checks += 2;
    const EpsLaurent want_tr = e == 0 ? EpsLaurent(1) : EpsLaurent();
    if (tr.coeff(e) != want_tr) r.failures.push_back("trace at lambda^" + std::to_string(e) + " is " + tr.coeff(e).to_string());
    if (!det.coeff(e).is_zero()) {
      r.failures.push_back("determinant at lambda^" + std::to_string(e) + " is " + det.coeff(e).to_string());
    }
  }
  return r;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {"identities", "degree1", "tables", "stability", "determinant"};
  return names;
}

VerifyReport run_verify_suite(const std::string& suite, const EngineOptions& options) {
  if (suite == "identities") return verify_identities(options.depth_override.value_or(12));
  if (suite == "degree1") return verify_degree1(options);
  if (suite == "tables") return verify_tables(options);
  if (suite == "stability") return verify_stability(options);
  if (suite == "determinant") return verify_determinant(options.depth_override.value_or(20));
  throw InvalidArgument("unknown verify suite '" + suite + "'");
}

}  // namespace p1gw
