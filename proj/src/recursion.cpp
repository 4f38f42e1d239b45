#include "p1gw/recursion.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "p1gw/errors.hpp"

namespace p1gw {

namespace {

// [lambda (lambda^b B)_+, A]. The extra lambda factor and the bracket order
// both follow from reading the lambda_3^{-b-2} coefficient off the cyclic
// three-point trace formula; the bare [A, (lambda^b B)_+] breaks parity.
ResolventMatrix bracket_with_plus(const ResolventMatrix& a, const ResolventMatrix& b_mat, int b) {
  return mat_commutator(shifted(plus_part(shifted(b_mat, b)), 1), a);
}

using EntryList = std::vector<RecursionKey::Entry>;

const ResolventMatrix& r_family_memo(const EntryList& entries, int depth, const ResolventMatrix& base,
                                     std::map<EntryList, ResolventMatrix>& memo) {
  if (auto it = memo.find(entries); it != memo.end()) return it->second;
  if (entries.empty()) return memo.emplace(entries, base).first->second;

  const int b = entries.front().b;
  const EntryList rest(entries.begin() + 1, entries.end());
  const std::size_t r = rest.size();
  ResolventMatrix sum;
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    EntryList in_i, in_j;
    for (std::size_t t = 0; t < r; ++t) ((mask >> t) & 1 ? in_i : in_j).push_back(rest[t]);
    ResolventMatrix term = bracket_with_plus(r_family_memo(in_i, depth, base, memo),
                                             r_family_memo(in_j, depth, base, memo), b);
    sum = sum + term;
  }
  return memo.emplace(entries, normalized(sum)).first->second;
}

}  // namespace

ResolventMatrix bare_bracket(const ResolventMatrix& a, const ResolventMatrix& b_mat, int b) {
  return mat_commutator(a, plus_part(shifted(b_mat, b)));
}

namespace {

void validate_key(const RecursionKey& key) {
  std::set<int> seen;
  for (const auto& e : key.entries) {
    if (e.index < 1) throw InvalidArgument("recursion indices must be positive");
    if (e.b < 1) throw InvalidArgument("recursion b-values must be positive");
    if (!seen.insert(e.index).second) throw InvalidArgument("recursion indices must be distinct");
  }
  if (key.entries.size() > 6) throw InvalidArgument("r_family supports |K| <= 6");
}

}  // namespace

ResolventMatrix r_family(const RecursionKey& key, int depth) {
  validate_key(key);
  std::map<EntryList, ResolventMatrix> memo;
  return r_family_memo(key.entries, depth, shared_resolvent(depth)->r, memo);
}

EpsLaurent extract_family(const RecursionKey& key, int i, int j, int depth) {
  if (i < 1 || j < 1) throw IndexOutOfRange("extraction covers only i, j >= 1");
  validate_key(key);
  std::map<EntryList, ResolventMatrix> memo;
  const auto bundle = shared_resolvent(depth);
  const ResolventMatrix& base = bundle->r;
  const std::size_t m = key.entries.size();
  const EpsLaurent delta = m == 0 ? EpsLaurent(1) : EpsLaurent();
  EpsLaurent sum;
  BigInt norm = factorial(i + 1) * factorial(j + 1);
  for (const auto& e : key.entries) norm *= factorial(e.b + 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    EntryList in_i, in_j;
    for (std::size_t t = 0; t < m; ++t) ((mask >> t) & 1 ? in_i : in_j).push_back(key.entries[t]);
    const ResolventMatrix a = r_family_memo(in_i, depth, base, memo);
    const ResolventMatrix b = r_family_memo(in_j, depth, base, memo);
    sum += trace_over_diff_squared_coeff(a, b, -i - 2, -j - 2, delta);
  }
  sum *= Rational(BigInt(1), norm);
  return sum.shifted(-static_cast<int>(m) - 2);
}

namespace {

struct EqualBMemo {
  std::mutex mutex;
  std::map<std::pair<int, int>, std::vector<ResolventMatrix>> sequences;  // (b, depth)
};

EqualBMemo& equal_b_memo() {
  static EqualBMemo memo;
  return memo;
}

}  // namespace

std::vector<ResolventMatrix> rm_equal_sequence(int b, int m, int depth) {
  if (b < 1) throw InvalidArgument("b must be positive");
  if (m < 0) throw InvalidArgument("m must be non-negative");
  std::vector<ResolventMatrix> seq;
  {
    auto& memo = equal_b_memo();
    std::lock_guard lock(memo.mutex);
    if (auto it = memo.sequences.find({b, depth}); it != memo.sequences.end()) seq = it->second;
  }
  if (static_cast<int>(seq.size()) > m) return {seq.begin(), seq.begin() + m + 1};
  if (seq.empty()) seq.push_back(shared_resolvent(depth)->r);
  while (static_cast<int>(seq.size()) <= m) {
    const int next = static_cast<int>(seq.size());
    ResolventMatrix sum;
    for (int i = 0; i < next; ++i) {
      ResolventMatrix term = bracket_with_plus(seq[static_cast<std::size_t>(i)],
                                               seq[static_cast<std::size_t>(next - 1 - i)], b);
      const EpsLaurent weight(Rational(binomial(next - 1, i)));
      sum = sum + term.map([&](const LambdaSeries& s) { return weight * s; });
    }
    seq.push_back(normalized(sum));
  }
  {
    auto& memo = equal_b_memo();
    std::lock_guard lock(memo.mutex);
    auto& slot = memo.sequences[{b, depth}];
    if (slot.size() < seq.size()) slot = seq;
  }
  return seq;
}

ResolventMatrix rm_equal(int b, int m, int depth) { return rm_equal_sequence(b, m, depth).back(); }

EpsLaurent extract_bij(int b, int m, int i, int j, int depth) {
  if (i < 1 || j < 1) {
    throw IndexOutOfRange("extraction covers only i, j >= 1 (tau_0 insertions are not read off this formula)");
  }
  const auto seq = rm_equal_sequence(b, m, depth);
  const EpsLaurent delta = m == 0 ? EpsLaurent(1) : EpsLaurent();
  EpsLaurent sum;
  for (int t = 0; t <= m; ++t) {
    EpsLaurent c = trace_over_diff_squared_coeff(seq[static_cast<std::size_t>(t)],
                                                 seq[static_cast<std::size_t>(m - t)], -i - 2, -j - 2, delta);
    sum += Rational(binomial(m, t)) * c;
  }
  BigInt norm = factorial(i + 1) * factorial(j + 1);
  norm *= pow(factorial(b + 1), static_cast<unsigned>(m));
  sum *= Rational(BigInt(1), norm);
  return sum.shifted(-(m + 2));
}

int default_bij_depth(int b, int m) { return (b + 2) * (m + 2) + 4; }

BijResult extract_bij_checked(int b, int m, int i, int j, bool stability, std::optional<int> start_depth) {
  constexpr int kStep = 4;
  constexpr int kMaxEscalations = 3;
  int depth = start_depth.value_or(default_bij_depth(b, m));
  for (int attempt = 0; attempt <= kMaxEscalations; ++attempt, depth += kStep) {
    try {
      EpsLaurent value = extract_bij(b, m, i, j, depth);
      if (stability && extract_bij(b, m, i, j, depth + kStep) != value) continue;
      return {std::move(value), depth, stability};
    } catch (const DepthExceeded&) {
      continue;
    }
  }
  throw UnstableExtraction("recursion extraction did not stabilise");
}

const PolygonTable::Row* PolygonTable::row(int n) const {
  for (const auto& r : rows) {
    if (r.n == n) return &r;
  }
  return nullptr;
}

PolygonTable polygon_table(int b, int n_max, int g_max, int n_min, const EngineOptions& options) {
  if (b < 0) throw InvalidArgument("b must be non-negative");
  if (n_min < 1 || n_max < n_min) throw InvalidArgument("need 1 <= n_min <= n_max");
  if (g_max < 0) throw InvalidArgument("g_max must be non-negative");
  PolygonTable table;
  table.b = b;
  table.g_max = g_max;
  for (int n = n_min; n <= n_max; ++n) {
    PolygonTable::Row row;
    row.n = n;
    const std::vector<int> ks(static_cast<std::size_t>(n), b);
    if ((b * n) % 2 != 0) {
      row.stability_verified = true;
    } else if (n == 1 || b == 0) {
      CorrelatorRecord rec = correlator(ks, options);
      row.value = rec.value;
      row.depth_used = rec.depth_used;
      row.stability_verified = rec.stability_verified;
    } else {
      BijResult res = extract_bij_checked(b, n - 2, b, b, options.stability, options.depth_override);
      row.value = std::move(res.value);
      row.depth_used = res.depth_used;
      row.stability_verified = res.stability_verified;
    }
    const auto split = split_by_genus(make_key(ks), row.value);
    for (int g = 0; g <= g_max; ++g) {
      row.by_genus.push_back(g < static_cast<int>(split.size()) ? split[static_cast<std::size_t>(g)].value
                                                                 : Rational(0));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace p1gw
