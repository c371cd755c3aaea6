#include <catch2/catch.hpp>

#include <random>

#include "lsacran/scenario.hpp"
#include "support/helpers.hpp"

using namespace lsacran;

TEST_CASE("the shipped reference scenario parses to the documented setup", "[scenario]") {
  const Scenario sc = test::reference_scenario();
  CHECK(sc.band.channel_count == 8);
  CHECK(sc.band.channel_width_hz == 5 * kMegaHertz);
  REQUIRE(sc.band.incumbents.size() == 4);
  for (const auto& inc : sc.band.incumbents) CHECK(inc.owned_channels.size() == 2);
  REQUIRE(sc.mvnos.size() == 5);
  for (const auto& req : sc.mvnos) {
    CHECK(req.min_rate_bps == 200 * kMbps);
    CHECK(req.price_per_bps_micro == 10);
  }
  CHECK(sc.limits.antennas_min_per_mvno == 20);
  CHECK(sc.limits.antennas_total == 100);
  CHECK(sc.rate_model.antennas_per_stream == 10);
  CHECK(sc.rate_model.sigma_millibps_per_hz == 10'000);
  CHECK(sc.events.size() == 4);
  CHECK(sc.events[2].urgency == Urgency::Urgent);
}

TEST_CASE("error categories are distinct and carry line context", "[scenario]") {
  SECTION("syntax") {
    try {
      parse_scenario("[band]\nchannel_count 8\n");
      FAIL("expected a throw");
    } catch (const scenario_error& e) {
      CHECK(e.kind() == ScenarioErrorKind::Syntax);
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_scenario("[band\n"), scenario_error);
    CHECK_THROWS_AS(parse_scenario("channel_count = 8\n"), scenario_error);
    CHECK_THROWS_AS(parse_scenario("[band]\nchannel_count = eight\n"), scenario_error);
  }

  SECTION("unknown keys and sections are rejected") {
    try {
      parse_scenario("[band]\nchannel_cout = 8\n");
      FAIL("expected a throw");
    } catch (const scenario_error& e) {
      CHECK(e.kind() == ScenarioErrorKind::UnknownKey);
      CHECK(e.field() == "channel_cout");
    }
    try {
      parse_scenario("[bandz]\n");
      FAIL("expected a throw");
    } catch (const scenario_error& e) {
      CHECK(e.kind() == ScenarioErrorKind::UnknownKey);
    }
  }

  SECTION("invariant violations") {
    const char* overlapping =
        "[incumbent a]\nchannels = 0 1\n[incumbent b]\nchannels = 1 2\n";
    try {
      parse_scenario(overlapping);
      FAIL("expected a throw");
    } catch (const scenario_error& e) {
      CHECK(e.kind() == ScenarioErrorKind::Invariant);
    }
    CHECK_THROWS_AS(parse_scenario("[mvno m1]\nmin_rate_bps = -5\nprice_per_bps_micro = 1\n"),
                    scenario_error);
    CHECK_THROWS_AS(parse_scenario("[mvno m1]\nmin_rate_bps = 5\n"), scenario_error);
    CHECK_THROWS_AS(parse_scenario("[band]\nchannel_count = 8\n[band]\nchannel_count = 9\n"),
                    scenario_error);
    CHECK_THROWS_AS(
        parse_scenario("[mvno m1]\nmin_rate_bps = 5\nprice_per_bps_micro = 1\n"
                       "[mvno m1]\nmin_rate_bps = 5\nprice_per_bps_micro = 1\n"),
        scenario_error);
  }

  SECTION("event cross-references must resolve") {
    CHECK_THROWS_AS(
        parse_scenario("[event]\ntime_us = 0\nkind = incumbent_return\nincumbent = ghost\n"),
        scenario_error);
    CHECK_THROWS_AS(parse_scenario("[event]\ntime_us = 0\nkind = mvno_leave\nmvno = ghost\n"),
                    scenario_error);
    const char* double_return =
        "[incumbent a]\nchannels = 0\n"
        "[event]\ntime_us = 0\nkind = incumbent_return\nincumbent = a\n"
        "[event]\ntime_us = 1\nkind = incumbent_return\nincumbent = a\n";
    CHECK_THROWS_AS(parse_scenario(double_return), scenario_error);
    const char* stray_release = "[incumbent a]\nchannels = 0\n"
                                "[event]\ntime_us = 0\nkind = incumbent_release\nincumbent = a\n";
    CHECK_THROWS_AS(parse_scenario(stray_release), scenario_error);
    const char* wrong_field = "[incumbent a]\nchannels = 0\n"
                              "[event]\ntime_us = 0\nkind = incumbent_return\nincumbent = a\n"
                              "min_rate_bps = 5\n";
    CHECK_THROWS_AS(parse_scenario(wrong_field), scenario_error);
  }
}

TEST_CASE("an empty file is a valid default scenario", "[scenario]") {
  const Scenario sc = parse_scenario("");
  CHECK(sc.band.channel_count == 8);
  CHECK(sc.mvnos.empty());
  CHECK(sc.events.empty());
}

TEST_CASE("emit and parse round-trip exactly", "[scenario]") {
  const Scenario reference = test::reference_scenario();
  CHECK(parse_scenario(emit_scenario(reference)) == reference);

  // randomized scenarios, including joins/leaves and deadline overrides
  std::mt19937 rng(301);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int round = 0; round < 50; ++round) {
    Scenario sc;
    sc.band.channel_count = pick(2, 12);
    sc.band.channel_width_hz = pick(1, 10) * kMegaHertz;
    if (pick(0, 1)) {
      Incumbent inc;
      inc.id = "inc0";
      inc.owned_channels = {0, 1};
      if (pick(0, 1)) inc.evacuation_deadline_us = pick(0, 1'000'000);
      sc.band.incumbents.push_back(inc);
    }
    sc.rate_model.antennas_per_stream = pick(1, 30);
    sc.rate_model.sigma_millibps_per_hz = pick(1, 30'000);
    sc.costs.per_antenna_micro = pick(0, 1'000'000);
    sc.costs.per_hz_micro = pick(0, 100);
    sc.protocol.hop_latency_us = pick(0, 100'000);
    sc.protocol.separate_cran_operator = pick(0, 1) == 1;
    sc.sim.baseline_enabled = pick(0, 1) == 1;
    const int mvnos = pick(0, 4);
    for (int i = 0; i < mvnos; ++i)
      sc.mvnos.push_back(MvnoRequest{"m" + std::to_string(i), pick(1, 500) * kMbps, pick(0, 50)});
    int seq = 0;
    if (!sc.band.incumbents.empty()) {
      SimEvent ret;
      ret.time_us = pick(0, 1000);
      ret.seq = seq++;
      ret.kind = EventKind::IncumbentReturn;
      ret.subject_id = "inc0";
      ret.urgency = pick(0, 1) ? Urgency::Urgent : Urgency::Graceful;
      sc.events.push_back(ret);
    }
    SimEvent join;
    join.time_us = pick(1000, 2000);
    join.seq = seq++;
    join.kind = EventKind::MvnoJoin;
    join.subject_id = "joiner";
    join.join_request = MvnoRequest{"joiner", pick(1, 500) * kMbps, pick(0, 50)};
    sc.events.push_back(join);
    SimEvent leave;
    leave.time_us = pick(2000, 3000);
    leave.seq = seq++;
    leave.kind = EventKind::MvnoLeave;
    leave.subject_id = "joiner";
    sc.events.push_back(leave);

    validate_scenario(sc);  // generator must produce valid scenarios
    const std::string text = emit_scenario(sc);
    CAPTURE(text);
    CHECK(parse_scenario(text) == sc);
  }
}

TEST_CASE("decimal scenario values are parsed exactly", "[scenario]") {
  const Scenario sc = parse_scenario(
      "[rate_model]\nm0 = 10\nsigma_bps_hz = 7.25\n"
      "[incumbent a]\nchannels = 0\nevacuation_deadline_s = 1.5\n");
  CHECK(sc.rate_model.sigma_millibps_per_hz == 7'250);
  REQUIRE(sc.band.incumbents.size() == 1);
  CHECK(sc.band.incumbents[0].evacuation_deadline_us == TimeUs{1'500'000});
  CHECK_THROWS_AS(parse_scenario("[rate_model]\nsigma_bps_hz = 7.2501\n"), scenario_error);
}
