#include "weightcat/commands.hpp"
#include "weightcat/report.hpp"

#include <doctest.h>

using namespace weightcat;

TEST_SUITE("report") {
    TEST_CASE("verdicts round-trip through JSON") {
        for (auto [type, theta] : {std::pair{"A4", std::vector<int>{0, 3}}, std::pair{"D5", std::vector<int>{1, 2, 3, 4}},
                                   std::pair{"C3", std::vector<int>{0}}, std::pair{"G2", std::vector<int>{}}}) {
            Verdict v = classify(CartanType::parse(type), theta);
            Json j = to_json(v);
            Verdict back = verdict_from_json(Json::parse(j.dump()));
            CHECK(to_json(back) == j);
            CHECK(back.kind == v.kind);
            CHECK(back.family.has_value() == v.family.has_value());
        }
    }

    TEST_CASE("lemma reports round-trip through JSON") {
        LabOptions o;
        o.depth = 3;
        o.window = 1;
        LemmaReport r = appendix_a3(frac(1, 2), frac(1, 3), 0, o);
        Json j = to_json(r);
        LemmaReport back = lemma_from_json(Json::parse(j.dump()));
        CHECK(back.constants == r.constants);
        CHECK(back.predictions == r.predictions);
        CHECK(back.theta == r.theta);
        CHECK(back.match == r.match);
        CHECK(to_json(back) == j);
        CHECK(j["theta"] == Json::array({2, 3}));
    }

    TEST_CASE("envelope and sorted keys") {
        Json e = envelope("classify", to_json(classify(CartanType::parse("A2"), {1})));
        CHECK(e["schema"] == "weightcat/1");
        std::string s = e.dump();
        CHECK(s.find("\"command\"") < s.find("\"result\""));
        CHECK(s.find("\"result\"") < s.find("\"schema\""));
    }

    TEST_CASE("front-end commands") {
        CommandResult c = run_classify("A4", {1, 4});
        CHECK(c.body["kind"] == "NONTRIVIAL");
        CHECK(c.body["theta"] == Json::array({1, 4}));
        CHECK_THROWS_AS(run_classify("A4", {5}), ConfigError);
        CHECK_THROWS_AS(run_classify("Q4", {}), ConfigError);

        CommandResult v = run_verify("M", "-1,1/4", std::nullopt, 2, 3);
        CHECK(v.pass);
        CHECK(v.body["suites"]["hw"]["pass"] == true);
        CHECK_THROWS_AS(run_verify("N", "1,2,0", std::nullopt, 2, 3), ConfigError);
        CHECK_THROWS_AS(run_verify("N", "-1,1/2,1/3,0", std::nullopt, -1, 3), ConfigError);

        CHECK(run_ext("sl2", "1/2,1/3", "", 3).body["dimension"] == 1);
        CHECK_THROWS_AS(run_ext("N", "-1,1/2,1/3,0", "", 0), CertificationImpossible);

        CommandResult l = run_lab("lemA12", "1/2,1/3", "", "", {}, 1, 3, 1);
        CHECK(l.pass);
        CHECK(l.body.contains("lemA12"));
        CHECK_THROWS_AS(run_lab("nosuch", "", "", "", {}, 1, 3, 1), ConfigError);
    }
}
