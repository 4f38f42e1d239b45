#include <algorithm>

#include "doctest.h"
#include "p1gw/correlators.hpp"
#include "p1gw/errors.hpp"
#include "p1gw/oracles.hpp"
#include "p1gw/recursion.hpp"
#include "p1gw/reference_data.hpp"
#include "support.hpp"

using namespace p1gw;
using namespace p1gw::testing;

namespace {

RecursionKey key_of(const std::vector<int>& bs) {
  RecursionKey k;
  for (std::size_t i = 0; i < bs.size(); ++i) k.entries.push_back({static_cast<int>(i) + 1, bs[i]});
  return k;
}

ResolventMatrix scaled(const ResolventMatrix& m, int s) {
  return m.map([&](const LambdaSeries& x) { return EpsLaurent(s) * x; });
}

}  // namespace

TEST_CASE("r_family base case and one index") {
  const int depth = 14;
  const ResolventMatrix r = shared_resolvent(depth)->r;
  CHECK(agree_within_depth(r_family(RecursionKey{}, depth), r));
  for (int b = 1; b <= 3; ++b) {
    // One index: the single partition I = J = {} gives -lambda [R, (lambda^b R)_+].
    const ResolventMatrix expected = shifted(scaled(bare_bracket(r, r, b), -1), 1);
    CHECK(agree_within_depth(r_family(key_of({b}), depth), expected));
    CHECK(agree_within_depth(rm_equal(b, 1, depth), expected));
  }
}

TEST_CASE("r_family validates its key") {
  CHECK_THROWS_AS(r_family(RecursionKey{{{1, 0}}}, 8), InvalidArgument);
  CHECK_THROWS_AS(r_family(RecursionKey{{{0, 1}}}, 8), InvalidArgument);
  CHECK_THROWS_AS(r_family(RecursionKey{{{1, 1}, {1, 2}}}, 8), InvalidArgument);
  CHECK_THROWS_AS(r_family(key_of({1, 1, 1, 1, 1, 1, 1}), 8), InvalidArgument);
}

TEST_CASE("rm_equal examples") {
  const int depth = 16;
  CHECK(agree_within_depth(rm_equal(2, 0, depth), shared_resolvent(depth)->r));
  CHECK(agree_within_depth(rm_equal(2, 2, depth), r_family(key_of({2, 2}), depth)));
  const auto seq = rm_equal_sequence(1, 3, depth);
  REQUIRE(seq.size() == 4);
  CHECK(agree_within_depth(seq.back(), rm_equal(1, 3, depth)));
}

TEST_CASE("property: rm_equal agrees with r_family on equal b-values") {
  for (int b = 1; b <= 3; ++b) {
    for (int m = 0; m <= 3; ++m) {
      const int depth = 8 + 2 * b * m;
      CAPTURE(b);
      CAPTURE(m);
      const ResolventMatrix binomial_form = rm_equal(b, m, depth);
      const ResolventMatrix direct = r_family(key_of(std::vector<int>(static_cast<std::size_t>(m), b)), depth);
      CHECK(agree_within_depth(binomial_form, direct));
    }
  }
}

TEST_CASE("property: r_family does not depend on the listing order of K") {
  const int depth = 10;
  const std::vector<std::vector<int>> b_sets = {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}, {1, 1, 2}, {3, 3, 1}, {2, 2, 2}};
  for (const auto& bs : b_sets) {
    RecursionKey key = key_of(bs);
    const ResolventMatrix reference_value = r_family(key, depth);
    std::sort(key.entries.begin(), key.entries.end());
    do {
      CHECK(agree_within_depth(r_family(key, depth), reference_value));
    } while (std::next_permutation(key.entries.begin(), key.entries.end()));
  }
}

TEST_CASE("extract_bij examples") {
  for (int b = 1; b <= 4; ++b) CHECK(extract_bij(b, 0, 1, 1, 8) == eps({{-2, "1/2"}}));
  const auto& flagships = reference::flagship_correlators();
  CHECK(extract_bij(2, 3, 2, 2, default_bij_depth(2, 3)) == flagships[1].value);
  CHECK(extract_bij(1, 4, 1, 1, default_bij_depth(1, 4)) == flagships[0].value);
  CHECK_THROWS_AS(extract_bij(1, 2, 0, 1, 12), IndexOutOfRange);
  CHECK_THROWS_AS(extract_bij(1, 2, 1, 0, 12), IndexOutOfRange);
}

TEST_CASE("extract_bij_checked escalates from a too-shallow start") {
  const BijResult r = extract_bij_checked(2, 3, 2, 2, true, 4);
  CHECK(r.value == reference::flagship_correlators()[1].value);
  CHECK(r.stability_verified);
  CHECK(r.depth_used > 4);
}

TEST_CASE("mixed b-values through the general extraction") {
  // <tau_1 tau_2 tau_i tau_j> from the recursion equals the direct route.
  const std::vector<std::pair<std::vector<int>, std::pair<int, int>>> cases = {
      {{1, 2}, {1, 2}}, {{1, 2}, {2, 3}}, {{1, 3}, {1, 1}}, {{2, 3}, {1, 2}}, {{1, 1, 2}, {1, 1}}};
  for (const auto& [bs, ij] : cases) {
    std::vector<int> ks = bs;
    ks.push_back(ij.first);
    ks.push_back(ij.second);
    CAPTURE(ks);
    CHECK(extract_family(key_of(bs), ij.first, ij.second, 24) == correlator(ks).value);
  }
}

TEST_CASE("property: recursion and direct route agree for b <= 3, m <= 2, i, j <= 3") {
  for (int b = 1; b <= 3; ++b) {
    for (int m = 0; m <= 2; ++m) {
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          std::vector<int> ks(static_cast<std::size_t>(m), b);
          ks.push_back(i);
          ks.push_back(j);
          CAPTURE(ks);
          CHECK(extract_bij_checked(b, m, i, j).value == correlator(ks).value);
        }
      }
    }
  }
}

TEST_CASE("polygon_table examples") {
  const PolygonTable t3 = polygon_table(3, 2, 4);
  CHECK(t3.rows.front().by_genus == std::vector<Rational>{Q("1/16"), Q("1/8"), Q("25/1152"), 0, 0});
  const PolygonTable t5 = polygon_table(5, 2, 5);
  CHECK(t5.rows.front().by_genus ==
        std::vector<Rational>{Q("1/864"), Q("1/96"), Q("451/23040"), Q("2597/414720"), Q("8281/66355200"), 0});

  const PolygonTable odd = polygon_table(3, 3, 3);
  CHECK(odd.row(3)->value.is_zero());
  for (const auto& v : odd.row(3)->by_genus) CHECK(v == 0);

  const PolygonTable zero = polygon_table(0, 5, 2);
  for (const auto& row : zero.rows) CHECK(row.by_genus == std::vector<Rational>{1, 0, 0});

  const PolygonTable with_one = polygon_table(2, 2, 2, 1);
  CHECK(with_one.row(1)->value == one_point(2));
  CHECK(with_one.row(2) != nullptr);
  CHECK(with_one.row(3) == nullptr);
}

TEST_CASE("polygon_table b = 1 reproduces the Hurwitz table through n = 10") {
  const PolygonTable t = polygon_table(1, 10, 5);
  const auto& ref = reference::polygon_table_reference(1);
  for (int n = 2; n <= 10; n += 2) {
    const auto* row = ref.row(n);
    REQUIRE(row != nullptr);
    for (std::size_t g = 0; g < row->by_genus.size() && g <= 5; ++g) {
      CAPTURE(n);
      CAPTURE(g);
      CHECK(t.row(n)->by_genus[g] == row->by_genus[g]);
    }
  }
}

TEST_CASE("property: polygon_table(1) entries are the Hurwitz numbers") {
  const PolygonTable t = polygon_table(1, 8, 4);
  for (int g = 0; g <= 3; ++g) {
    for (int d = 1; 2 * g + 2 * d - 2 <= 8; ++d) {
      const int n = 2 * g + 2 * d - 2;
      if (n < 2) continue;
      CHECK(t.row(n)->by_genus[static_cast<std::size_t>(g)] == hurwitz(g, d));
    }
  }
  // Genus-zero Hurwitz numbers have the closed form d^{d-3} (2d-2)! / d!.
  for (int d = 2; d <= 5; ++d) {
    const Rational closed = pow(Rational(d), d - 3) * Rational(factorial(2 * d - 2)) / Rational(factorial(d));
    CHECK(hurwitz(0, d) == closed);
  }
}
