#include <algorithm>

#include "doctest.h"
#include "p1gw/correlators.hpp"
#include "p1gw/errors.hpp"
#include "p1gw/recursion.hpp"
#include "p1gw/reference_data.hpp"
#include "support.hpp"

using namespace p1gw;
using namespace p1gw::testing;

namespace {

const EpsLaurent& flagship(const std::vector<int>& ks) {
  for (const auto& f : reference::flagship_correlators()) {
    if (f.insertions == ks) return f.value;
  }
  throw std::logic_error("no such flagship correlator");
}

std::vector<GenusDegreeValue> rows(std::initializer_list<std::tuple<int, int, const char*>> list) {
  std::vector<GenusDegreeValue> out;
  for (const auto& [g, d, v] : list) out.push_back({g, d, Q(v)});
  return out;
}

}  // namespace

TEST_CASE("one_point examples") {
  CHECK(one_point(0) == eps({{-2, "1"}, {0, "-1/24"}}));
  CHECK(one_point(2) == eps({{-2, "1/4"}, {0, "1/24"}, {2, "7/5760"}}));
  CHECK(one_point(3).is_zero());
  CHECK(one_point(1).is_zero());
}

TEST_CASE("one_point matches the reference one-point series head") {
  // Coefficient of lambda^{-k-2} is <tau_k> (k+1)! eps.
  const auto& head = reference::one_point_series_head();
  for (int idx = 0; idx < static_cast<int>(head.size()); ++idx) {
    const int k = 2 * idx;
    CHECK((one_point(k) * Rational(factorial(k + 1))).shifted(1) == head[static_cast<std::size_t>(idx)]);
  }
}

TEST_CASE("two_point examples") {
  CHECK(two_point(0, 0) == eps({{-2, "1"}}));
  CHECK(two_point(1, 1) == eps({{-2, "1/2"}}));
  CHECK(two_point(2, 2) == eps({{-2, "1/3"}, {0, "1/6"}, {2, "1/576"}}));
  CHECK(two_point(1, 2).is_zero());
  CHECK(two_point(3, 1) == two_point(1, 3));
}

TEST_CASE("two_point needs enough depth") {
  CHECK_THROWS_AS(two_point(4, 4, 6), DepthExceeded);
  CHECK(two_point(4, 4, 12) == two_point(4, 4, 20));
}

TEST_CASE("n_point examples") {
  CHECK(n_point({2, 2, 2}) == eps({{-2, "1"}, {0, "25/24"}, {2, "19/192"}, {4, "1/13824"}}));
  CHECK(n_point({1, 1, 1, 1, 1, 1}) == flagship({1, 1, 1, 1, 1, 1}));
  CHECK(n_point({0, 0, 0}) == eps({{-2, "1"}}));
  CHECK(n_point({0, 0, 0, 0, 0}) == eps({{-2, "1"}}));
  CHECK_THROWS_AS(n_point({1, 1}), InvalidArgument);
  CHECK_THROWS_AS(n_point({1, 1, 1, 1, 1, 1, 1, 1, 1}), InvalidArgument);
}

TEST_CASE("cyclic contraction agrees with the full multivariate expansion") {
  struct Setup {
    int n, resolvent_depth, edge_depth;
    std::vector<std::vector<int>> probes;
  };
  const std::vector<Setup> setups = {
      {3, 9, 8, {{-2, -2, -2}, {-3, -2, -3}, {-4, -4, -2}, {-2, -3, -4}, {-4, -4, -4}, {1, -4, -2}, {-3, 1, -4}, {0, -2, -2}}},
      {4, 8, 6, {{-2, -2, -2, -2}, {1, -2, -2, -2}, {-2, -1, -2, -2}, {0, -2, -1, -2}}},
  };
  for (const auto& s : setups) {
    const MultiSeries full = n_point_expansion(s.n, s.resolvent_depth, s.edge_depth);
    CHECK(full.depth(0) == n_point_expansion_window(s.n, s.resolvent_depth, s.edge_depth));
    for (const auto& e : s.probes) {
      CAPTURE(e);
      CHECK(full.coeff(e) == n_point_coefficient(e, s.resolvent_depth));
    }
  }
}

TEST_CASE("the multivariate expansion has no exponent above -2") {
  const MultiSeries full = n_point_expansion(3, 9, 8);
  REQUIRE(full.depth(0) == 4);
  CHECK_FALSE(full.is_zero());
  for (const auto& [e, c] : full.terms()) {
    CAPTURE(e);
    CHECK(*std::max_element(e.begin(), e.end()) <= -2);
  }
  CHECK_THROWS_AS(full.coeff({-5, -2, -2}), DepthExceeded);
}

TEST_CASE("split_by_genus examples") {
  const CorrelatorKey k2 = make_key({2, 2, 2, 2, 2});
  CHECK(split_by_genus(k2, flagship({2, 2, 2, 2, 2})) ==
        rows({{0, 6, "36"}, {1, 5, "2513/24"}, {2, 4, "9745/144"}, {3, 3, "5435/768"}, {4, 2, "2801/82944"},
              {5, 1, "1/7962624"}, {6, 0, "0"}}));
  CHECK(split_by_genus(make_key({0}), one_point(0)) == rows({{0, 1, "1"}, {1, 0, "-1/24"}}));
  CHECK(split_by_genus(make_key({1, 1}), EpsLaurent()) == rows({{0, 2, "0"}, {1, 1, "0"}, {2, 0, "0"}}));
  CHECK_THROWS_AS(split_by_genus(make_key({1, 1}), eps({{-1, "1"}})), MalformedValue);
  CHECK_THROWS_AS(split_by_genus(make_key({1, 1}), eps({{-4, "1"}})), MalformedValue);
  CHECK_THROWS_AS(split_by_genus(make_key({1, 1}), eps({{4, "1"}})), MalformedValue);
}

TEST_CASE("correlator examples") {
  const CorrelatorRecord r444 = correlator({4, 4, 4});
  CHECK(r444.key.insertions == std::vector<int>{4, 4, 4});
  CHECK(r444.stability_verified);
  CHECK(r444.by_genus == rows({{0, 7, "1/64"},
                               {1, 6, "59/384"},
                               {2, 5, "4217/10240"},
                               {3, 4, "433/1536"},
                               {4, 3, "443323/14745600"},
                               {5, 2, "1261/9830400"},
                               {6, 1, "1/7077888000"},
                               {7, 0, "0"}}));

  const CorrelatorRecord r66 = correlator({6, 6});
  CHECK(r66.value == flagship({6, 6}));
  const auto* table6 = reference::polygon_table_reference(6).row(2);
  REQUIRE(table6 != nullptr);
  for (std::size_t g = 0; g < table6->by_genus.size(); ++g) CHECK(r66.by_genus[g].value == table6->by_genus[g]);

  const CorrelatorRecord r1 = correlator({1});
  CHECK(r1.value.is_zero());
  CHECK(r1.by_genus.empty());

  CHECK(correlator({0, 2, 1, 3}).key.insertions == std::vector<int>{3, 2, 1, 0});
  CHECK_THROWS_AS(correlator({1, 1, 1, 1, 1, 1, 1, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(correlator({2, 2}, {std::nullopt, true, 0}), InvalidArgument);
}

TEST_CASE("correlator honours a depth override and reports it") {
  const CorrelatorRecord r = correlator({2, 2, 2}, {20, false, 1});
  CHECK(r.depth_used == 20);
  CHECK_FALSE(r.stability_verified);
  CHECK(r.value == n_point({2, 2, 2}));
}

TEST_CASE("stability_check examples") {
  CHECK(stability_check({2, 2, 2}, 10, 14));
  CHECK(stability_check({1, 1, 1, 1, 1, 1}, 18, 22));
  for (int i = 0; i <= 5; ++i) {
    for (int j = i; j <= 5; ++j) CHECK(stability_check({i, j}, i + j + 4, i + j + 8));
  }
  CHECK_THROWS_AS(stability_check({2, 2}, 8, 9), InvalidArgument);
}

TEST_CASE("cross-engine: two_point equals the recursion extraction at m = 0") {
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      for (int b = 1; b <= 2; ++b) CHECK(extract_bij(b, 0, i, j, i + j + 4) == two_point(i, j));
    }
  }
}
