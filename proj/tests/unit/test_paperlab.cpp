#include "weightcat/paperlab.hpp"

#include <doctest.h>

using namespace weightcat;

namespace {

Q constant(const LemmaReport& r, const std::string& key) {
    auto it = r.constants.find(key);
    REQUIRE_MESSAGE(it != r.constants.end(), "missing constant " << key);
    return it->second;
}

const LemmaCheck& check(const LemmaReport& r, const std::string& name) {
    for (auto& c : r.checks)
        if (c.name == name) return c;
    FAIL("missing check " << name);
    return r.checks.front();
}

LabOptions quick() {
    LabOptions o;
    o.depth = 3;
    o.window = 2;
    return o;
}

}  // namespace

TEST_SUITE("lab") {
    TEST_CASE("sl2 x A2 lemma: both central values and the ratio formula") {
        for (auto [a1, a2] : {std::pair{frac(1, 2), frac(1, 3)}, std::pair{frac(-2, 5), frac(3, 7)}}) {
            LemmaReport r = verify_lemA12(a1, a2, quick());
            CHECK(r.match);
            Q A = a1 + a2;
            CHECK(constant(r, "c[c=0]") == 0);
            CHECK(constant(r, "c[c=-1-A]") == -1 - A);
            for (Q c : QVec{Q(0), -1 - A}) {
                std::string br = c == 0 ? "c=0" : "c=-1-A";
                for (int k = -2; k <= 2; ++k)
                    CHECK(constant(r, "eta[" + br + "](k=" + std::to_string(k) + ")") == (c + a1 + k) / (a2 - k + 1));
            }
        }
    }

    TEST_CASE("c = 1/2 never appears as a central value") {
        LemmaReport r = verify_lemA12(frac(1, 2), frac(1, 3), quick());
        CHECK(check(r, "c-set").computed == "{-11/6, 0}");
    }

    TEST_CASE("appendix: d and the two ratios") {
        Q a1 = frac(1, 2), a2 = frac(1, 3), A = a1 + a2;
        for (Q c : QVec{Q(0), -1 - A}) {
            LemmaReport r = appendix_a3(a1, a2, c, quick());
            CHECK(r.match);
            Q d = -2 - A - 2 * c;
            CHECK(constant(r, "d") == d);
            for (int k = -2; k <= 2; ++k) {
                std::string ks = "(k=" + std::to_string(k) + ")";
                CHECK(constant(r, "eta1" + ks) == -(c + a2 - k + 2) / (a2 - k + 1));
                CHECK(constant(r, "eta2" + ks) == (c + a2 - k + 1) / (a2 - k + 1));
            }
        }
        CHECK(constant(appendix_a3(a1, a2, 0, quick()), "d") == frac(-17, 6));
    }

    TEST_CASE("appendix: the kernel power when A is a negative integer below -1") {
        // A = -5/2 + 1/2 = -2: X_{-b2}^{-A-1} = X_{-b2}^1 dies on the c=0 branch
        LemmaReport r = appendix_a3(frac(-5, 2), frac(1, 2), 0, quick());
        CHECK(r.match);
        CHECK(check(r, "first vanishing power of X_-b2").computed == "1");
    }

    TEST_CASE("long-root C2 lemma: 2c+2A+1 = 0") {
        Q a1 = frac(1, 4), a2 = frac(-3, 4);
        LemmaReport r = verify_AC1(a1, a2, quick());
        CHECK(r.match);
        CHECK(2 * constant(r, "c") + 2 * (a1 + a2) + 1 == 0);
        CHECK_THROWS_AS(verify_AC1(frac(1, 4), frac(1, 4), quick()), LabInputError);
    }

    TEST_CASE("sl2 inside A_n: c + c' + A + 1 = 0 and cc' = 0") {
        Q a1 = frac(1, 3), a2 = frac(1, 5);
        LemmaReport r = verify_A1N(4, 2, a1, a2, quick());
        CHECK(r.match);
        Q c = constant(r, "c"), cp = constant(r, "c'");
        CHECK(c + cp + a1 + a2 + 1 == 0);
        CHECK(c * cp == 0);
        for (auto& [k, v] : r.constants)
            if (k.rfind("d_", 0) == 0 || k.rfind("d'_", 0) == 0) CHECK(v == 0);
    }

    TEST_CASE("type C block lemma: c = -1") {
        LemmaReport r = verify_CC(3, {frac(1, 3), frac(1, 4)}, quick());
        CHECK(r.match);
        CHECK(constant(r, "c") == -1);
    }

    TEST_CASE("A_k block lemma") {
        LemmaReport r = verify_AkAn(4, {1, 2}, {frac(1, 3), frac(1, 4), frac(1, 5)}, quick());
        CHECK(r.match);
        CHECK(constant(r, "c") == 0);
    }

    TEST_CASE("every lemma is depth stable on seeded parameters") {
        for (auto& id : lemma_ids())
            for (unsigned seed : {2u, 5u}) {
                CAPTURE(id);
                LabRequest req = random_request(id, seed);
                req.options = quick();
                LemmaReport r = run_lemma(req);
                CHECK(r.match);
                CHECK(check(r, "depth 3 vs 4").ok);
            }
    }

    TEST_CASE("bad requests") {
        LabRequest r;
        r.id = "lemA12";
        r.a = {frac(1, 2)};
        CHECK_THROWS_AS(run_lemma(r), LabInputError);
        r.id = "nosuch";
        CHECK_THROWS_AS(run_lemma(r), LabInputError);
        CHECK_THROWS_AS(appendix_a3(frac(1, 2), frac(1, 3), frac(1, 7)), LabInputError);
        CHECK_THROWS_AS(verify_lemA12(1, frac(1, 3)), LabInputError);
    }
}
