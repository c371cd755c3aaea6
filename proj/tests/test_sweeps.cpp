#include <catch2/catch.hpp>

#include "lsacran/report.hpp"
#include "lsacran/sweeps.hpp"
#include "support/helpers.hpp"

using namespace lsacran;

TEST_CASE("incumbent sweep reproduces both served-MVNO columns", "[sweeps]") {
  const Scenario sc = test::reference_scenario();

  SECTION("200 Mbps") {
    const auto rows = sweep_incumbents(sc);
    REQUIRE(rows.size() == 5);
    const int expected_dynamic[] = {5, 5, 4, 2, 0};
    const int expected_static[] = {4, 3, 2, 1, 0};
    for (size_t k = 0; k < rows.size(); ++k) {
      CAPTURE(k);
      CHECK(rows[k].active_incumbents == static_cast<int>(k));
      CHECK(rows[k].served_dynamic == expected_dynamic[k]);
      CHECK(rows[k].served_static == expected_static[k]);
    }
  }

  SECTION("430 Mbps override, cross-checked against both oracles") {
    const auto rows = sweep_incumbents(sc, Bps{430} * kMbps);
    const int expected_dynamic[] = {5, 5, 4, 2, 0};
    const int expected_static[] = {1, 1, 0, 0, 0};
    std::vector<MvnoRequest> requests = sc.mvnos;
    for (auto& r : requests) r.min_rate_bps = 430 * kMbps;
    for (size_t k = 0; k < rows.size(); ++k) {
      CAPTURE(k);
      CHECK(rows[k].served_dynamic == expected_dynamic[k]);
      CHECK(rows[k].served_static == expected_static[k]);
      BandPlan plan = make_band_plan(sc.band);
      for (size_t i = 0; i < k; ++i) plan.reclaim(sc.band.incumbents[i].id);
      CHECK(rows[k].revenue_dynamic_micro ==
            allocate_oracle(requests, plan, sc.rate_model, sc.limits, sc.costs).revenue_micro);
      CHECK(rows[k].revenue_static_micro ==
            test::static_oracle(requests, plan, sc.rate_model, sc.limits, sc.costs).revenue);
    }
  }

  SECTION("no MVNOs, all-zero columns") {
    Scenario empty = sc;
    empty.mvnos.clear();
    empty.events.clear();
    for (const auto& row : sweep_incumbents(empty)) {
      CHECK(row.served_dynamic == 0);
      CHECK(row.served_static == 0);
      CHECK(row.revenue_dynamic_micro == 0);
      CHECK(row.revenue_static_micro == 0);
    }
  }
}

TEST_CASE("every sweep row is reproducible by a direct allocator call", "[sweeps]") {
  const Scenario sc = test::reference_scenario();
  const auto rows = sweep_incumbents(sc);
  for (const auto& row : rows) {
    BandPlan plan = make_band_plan(sc.band);
    for (int i = 0; i < row.active_incumbents; ++i) plan.reclaim(sc.band.incumbents[i].id);
    const auto direct = allocate_dynamic(sc.mvnos, plan, sc.rate_model, sc.limits, sc.costs);
    CHECK(direct.revenue_micro == row.revenue_dynamic_micro);
    CHECK(direct.entries == row.dynamic_allocation.entries);
  }
}

TEST_CASE("cost sweep shows the dynamic advantage and its collapse", "[sweeps]") {
  const Scenario sc = test::reference_scenario();
  const auto rows = sweep_cost_ratio(sc, 3e-8, 1e-5, 20);
  REQUIRE(rows.size() == 20);

  for (const auto& row : rows) CHECK(row.revenue_dynamic_micro >= row.revenue_static_micro);

  // cheap antennas: dynamic wins clearly
  CHECK(rows.back().revenue_dynamic_micro > rows.back().revenue_static_micro);

  // expensive antennas: dynamic falls back to the minimum antenna count and
  // the two systems coincide
  const auto& costly = rows.front();
  CHECK(costly.revenue_dynamic_micro == costly.revenue_static_micro);
  for (const auto& e : costly.dynamic_allocation.entries)
    if (e.served) CHECK(e.antennas == sc.limits.antennas_min_per_mvno);

  // grid is monotone and log-spaced between the requested bounds
  CHECK(rows.front().ratio == Approx(3e-8));
  CHECK(rows.back().ratio == Approx(1e-5));
  for (size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ratio > rows[i - 1].ratio);

  // rows are reproducible by a direct allocator call at the row's costs
  const auto& mid = rows[10];
  CostModel costs = sc.costs;
  costs.per_antenna_micro = mid.cost_per_antenna_micro;
  const auto direct = allocate_dynamic(sc.mvnos, make_band_plan(sc.band), sc.rate_model,
                                       sc.limits, costs);
  CHECK(direct.revenue_micro == mid.revenue_dynamic_micro);
  CHECK(direct.entries == mid.dynamic_allocation.entries);
}

TEST_CASE("joint scaling of prices and costs scales sweep revenues exactly", "[sweeps]") {
  Scenario sc = test::reference_scenario();
  const auto base = sweep_incumbents(sc);
  Scenario doubled = sc;
  doubled.costs.per_antenna_micro *= 2;
  doubled.costs.per_hz_micro *= 2;
  for (auto& req : doubled.mvnos) req.price_per_bps_micro *= 2;
  const auto scaled = sweep_incumbents(doubled);
  REQUIRE(scaled.size() == base.size());
  for (size_t k = 0; k < base.size(); ++k) {
    CHECK(scaled[k].served_dynamic == base[k].served_dynamic);
    CHECK(scaled[k].revenue_dynamic_micro == 2 * base[k].revenue_dynamic_micro);
    CHECK(scaled[k].revenue_static_micro == 2 * base[k].revenue_static_micro);
    CHECK(scaled[k].dynamic_allocation.entries == base[k].dynamic_allocation.entries);
  }
}

TEST_CASE("sweep CSVs are byte-stable and carry integer money", "[sweeps]") {
  const Scenario sc = test::reference_scenario();
  const std::string a = incumbent_sweep_csv(sweep_incumbents(sc));
  const std::string b = incumbent_sweep_csv(sweep_incumbents(sc));
  CHECK(a == b);
  CHECK(a.rfind("active_incumbents,served_dynamic,served_static,revenue_dynamic_micro,"
                "revenue_static_micro\n", 0) == 0);

  const std::string c = cost_ratio_sweep_csv(sweep_cost_ratio(sc, 1e-7, 1e-6, 5));
  const std::string d = cost_ratio_sweep_csv(sweep_cost_ratio(sc, 1e-7, 1e-6, 5));
  CHECK(c == d);
}

TEST_CASE("sweep argument preconditions", "[sweeps]") {
  const Scenario sc = test::reference_scenario();
  CHECK_THROWS_AS(sweep_cost_ratio(sc, 0.0, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(sweep_cost_ratio(sc, 1.0, 0.5, 5), std::invalid_argument);
  CHECK_THROWS_AS(sweep_cost_ratio(sc, 1e-7, 1e-6, 1), std::invalid_argument);
  CHECK_THROWS_AS(sweep_incumbents(sc, Bps{0}), std::invalid_argument);
}
