#include "weightcat/categorio.hpp"

#include <doctest.h>

using namespace weightcat;

namespace {

Verdict by_complement(const char* type, std::vector<int> S) {
    CartanType t = CartanType::parse(type);
    return classify(t, complement(t.rank, S));
}

std::vector<CartanType> all_types(int max_rank) {
    std::vector<CartanType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (int n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
    for (int n : {6, 7, 8})
        if (n <= max_rank) out.push_back({Family::E, n});
    if (max_rank >= 4) out.push_back({Family::F, 4});
    out.push_back({Family::G, 2});
    return out;
}

}  // namespace

TEST_SUITE("categorio") {
    TEST_CASE("named verdicts") {
        CHECK(by_complement("B4", {1}).kind == VerdictKind::TRIVIAL);
        CHECK(by_complement("D5", {0}).kind == VerdictKind::EXCLUDED);
        CHECK(by_complement("G2", {0}).kind == VerdictKind::TRIVIAL);
        Verdict a4 = classify(CartanType::parse("A4"), {0, 3});
        CHECK(a4.kind == VerdictKind::NONTRIVIAL);
        REQUIRE(a4.family.has_value());
        CHECK(a4.family->str() == "N(-1,a1,a2,a3,0)");
        CHECK(a4.semisimple == Tri::YES);
        Verdict c3 = by_complement("C3", {1, 2});
        CHECK(c3.kind == VerdictKind::NONTRIVIAL);
        CHECK(c3.family->str() == "M(-1,a1,a2)");
    }

    TEST_CASE("classification is total and the extremes are fixed") {
        for (auto t : all_types(8)) {
            CAPTURE(t.str());
            for (int mask = 0; mask < (1 << t.rank); ++mask) {
                std::vector<int> theta;
                for (int i = 0; i < t.rank; ++i)
                    if (mask >> i & 1) theta.push_back(i);
                Verdict v;
                REQUIRE_NOTHROW(v = classify(t, theta));
                CHECK_FALSE(v.reason.empty());
                if (mask == 0) CHECK(v.kind == VerdictKind::CUSPIDAL);
                if (mask == (1 << t.rank) - 1) CHECK(v.kind == VerdictKind::HIGHEST_WEIGHT);
                bool nontrivial_family = t.family == Family::A || t.family == Family::C ||
                                         (t.family == Family::B && t.rank == 2) ||
                                         (t.family == Family::D && t.rank == 3);
                if (v.kind == VerdictKind::NONTRIVIAL) {
                    CHECK(nontrivial_family);
                    CHECK(v.family.has_value());
                }
                if (v.kind == VerdictKind::EXCLUDED) CHECK(v.degree1 == Tri::UNKNOWN);
            }
        }
    }

    TEST_CASE("type A nontrivial exactly for connected complements") {
        for (int n = 2; n <= 6; ++n)
            for (int mask = 1; mask < (1 << n) - 1; ++mask) {
                std::vector<int> S;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1) S.push_back(i);
                bool connected = S.back() - S.front() + 1 == static_cast<int>(S.size());
                CHECK((classify({Family::A, n}, complement(n, S)).kind == VerdictKind::NONTRIVIAL) == connected);
            }
    }

    TEST_CASE("end-node Levi in A_n, n > 2, leaves degree one") {
        CHECK(by_complement("A4", {0}).degree1 == Tri::NO);
        CHECK(by_complement("A4", {3}).degree1 == Tri::NO);
        CHECK(by_complement("A2", {0}).degree1 == Tri::YES);
        CHECK(by_complement("A4", {1}).degree1 == Tri::YES);
    }

    TEST_CASE("theta specs are validated") {
        CHECK_THROWS_AS(classify(CartanType::parse("A3"), {3}), std::invalid_argument);
        CHECK_THROWS_AS(classify(CartanType::parse("A3"), {1, 1}), std::invalid_argument);
        ThetaSpec bad{CartanType::parse("A3"), {0, 2}, {0}};
        CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
        ThetaSpec ok{CartanType::parse("A3"), {0}, {0, 2}};
        CHECK_NOTHROW(ok.validate());
        CHECK(ok.cuspidal_part() == std::vector<int>{2});
    }

    TEST_CASE("infinite-dimensionality criterion") {
        CHECK(infinite_dim_criterion(ThetaSpec::full(CartanType::parse("A2"), {0})));
        CHECK_FALSE(infinite_dim_criterion(ThetaSpec{CartanType::parse("A3"), {0}, {0, 2}}));
        CHECK(infinite_dim_criterion(ThetaSpec{CartanType::parse("A3"), {0}, {0, 1}}));
    }

    TEST_CASE("membership of the families and rejection under a wrong theta") {
        auto spec = parse_spec("N", "-1,1/2,1/3,0");
        auto M = build(spec);
        CHECK(check_membership(M, ThetaSpec::full(spec.type, theta_of(spec)), 2, 3).pass());
        auto wrong = check_membership(M, ThetaSpec::full(spec.type, {0}), 2, 3);
        CHECK_FALSE(wrong.pass());
        CHECK(wrong.cuspidality.verdict == Tri::NO);
        auto mspec = parse_spec("M", "-1,1/4");
        CHECK(check_membership(build(mspec), ThetaSpec::full(mspec.type, theta_of(mspec)), 2, 3).pass());
    }

    TEST_CASE("cuspidal and locally nilpotent roots of N(1/2,1/3,0)") {
        auto M = build(parse_spec("N", "1/2,1/3,0"));
        auto part = cuspidal_nilpotent_partition(*M, 3);
        CHECK(part.injective.count(Root{1, 0}) == 1);
        CHECK(part.injective.count(Root{-1, 0}) == 1);
        CHECK(part.nilpotent.count(Root{0, 1}) == 1);
    }
}
