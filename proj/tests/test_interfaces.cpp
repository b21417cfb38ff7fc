// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "rok/json_io.hpp"
#include "rok/rng.hpp"
#include "rok/verify.hpp"

using namespace rok;

TEST_CASE("step and law JSON round-trips") {
    // an explicit zero plateau keeps its length through the round trip
    const DecreasingStep with_zero = DecreasingStep::canonical({{1.0, 1.0}, {2.0, 0.0}});
    const DecreasingStep back = step_from_json(to_json(with_zero));
    REQUIRE(back.size() == 2);
    CHECK(back.total_length() == doctest::Approx(3.0));

    CounterRng rng = CounterRng::keyed(211, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const DecreasingStep f = random_step(rng, 6, 1.0 + rng.next_unit());
        CHECK(step_from_json(to_json(f)).approx_equal(f, 0.0));

        const DiscreteDistribution law = random_law(rng, 5, false, false);
        const DiscreteDistribution back = law_from_json(to_json(law));
        REQUIRE(back.atoms().size() == law.atoms().size());
        for (std::size_t i = 0; i < law.atoms().size(); ++i) {
            CHECK(back.atoms()[i].value == law.atoms()[i].value);
            CHECK(back.atoms()[i].mass == law.atoms()[i].mass);
        }
    }
}

TEST_CASE("orlicz specs parse and reject junk") {
    CHECK(orlicz_from_json(json::parse(R"({"family":"power","p":2})"))(3.0) == 9.0);
    CHECK(orlicz_from_json(json::parse(R"({"family":"Mp","p":1.5})")).is_normalized());
    CHECK(orlicz_from_json(json::parse(R"({"family":"Nn","q":2,"n":4})"))(1.0) ==
          doctest::Approx(1.75));
    CHECK(orlicz_from_json(json::parse(R"({"family":"Mn","q":2,"n":4})")).is_normalized());
    CHECK(orlicz_from_json(json::parse(R"({"family":"Mny","p":1,"y":[1,1]})"))(1.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(orlicz_from_json(
              json::parse(R"({"family":"NM","base":{"family":"Mp","p":1.5},"p":1.2})"))(0.5) ==
          doctest::Approx(0.25));
    CHECK(orlicz_from_json(json::parse(R"({"family":"MaxP2","p":1.5})"))(2.0) == 4.0);

    CHECK_THROWS_AS(orlicz_from_json(json::parse(R"({"family":"nope"})")), PreconditionError);
    CHECK_THROWS_AS(orlicz_from_json(json::parse(R"({"family":"power","p":2,"extra":1})")),
                    PreconditionError);
    CHECK_THROWS_AS(step_from_json(json::parse(R"({"plateaus":[[1,1]],"x":0})")),
                    PreconditionError);
}

TEST_CASE("tabulated specs pass through the convexity gate") {
    json pts = json::array();
    for (double t : log_grid(1e-4, 2.0, 24)) pts.push_back({t, t * t});
    const OrliczFunction m = orlicz_from_json(json{{"family", "tabulated"}, {"points", pts}});
    CHECK(m(0.5) == doctest::Approx(0.25).epsilon(1e-9));

    json bad = json::array();
    for (double t : log_grid(1e-4, 2.0, 24)) bad.push_back({t, std::sqrt(t)});
    CHECK_THROWS_AS(orlicz_from_json(json{{"family", "tabulated"}, {"points", bad}}),
                    PreconditionError);
}

TEST_CASE("quasi-concave specs") {
    CHECK(quasiconcave_from_json(json::parse(R"({"form":"power","theta":0.5})"))(0.25) ==
          doctest::Approx(0.5));
    const QuasiConcaveFn phi = quasiconcave_from_json(
        json::parse(R"({"form":"from_M","M":{"family":"Mp","p":1.5},"p":1.3})"));
    CHECK(phi.grid_check());
    CHECK_THROWS_AS(quasiconcave_from_json(json::parse(R"({"form":"zigzag"})")),
                    PreconditionError);
}

TEST_CASE("report serialization") {
    VerificationReport rep;
    rep.check = "demo";
    rep.params = "n=2";
    rep.ratio_min = 0.5;
    rep.ratio_max = 1.5;
    rep.band_low = 0.25;
    rep.band_high = 4.0;
    rep.pass = true;
    rep.seed = 9;
    const json j = to_json(rep);
    for (const char* key : {"check", "inputs_digest", "max_deviation", "bound", "pass", "seed"})
        CHECK(j.contains(key));

    std::ostringstream os;
    write_csv({rep}, os);
    std::istringstream is(os.str());
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(header == "check,params,ratio_min,ratio_max,band_low,band_high,pass");
    CHECK(row.find("demo") == 0);
    CHECK(row.find("true") != std::string::npos);
}

TEST_CASE("digest is stable") {
    CHECK(digest("abc") == digest("abc"));
    CHECK(digest("abc") != digest("abd"));
}
