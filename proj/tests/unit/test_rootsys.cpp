#include "weightcat/linalg.hpp"
#include "weightcat/rootsys.hpp"

#include <doctest.h>

#include <algorithm>

using namespace weightcat;

namespace {

struct Known {
    const char* type;
    int positive;
    int coxeter;
    int cartan_det;
};

// |R+|, Coxeter number and det of the Cartan matrix
const Known kKnown[] = {
    {"A1", 1, 2, 2},   {"A4", 10, 5, 5},   {"B2", 4, 4, 2},   {"B5", 25, 10, 2}, {"C3", 9, 6, 2},
    {"C4", 16, 8, 2},  {"D4", 12, 6, 4},   {"D6", 30, 10, 4}, {"E6", 36, 12, 3}, {"E7", 63, 18, 2},
    {"E8", 120, 30, 1}, {"F4", 24, 12, 1}, {"G2", 6, 6, 1},
};

}  // namespace

TEST_SUITE("rootsys") {
    TEST_CASE("root counts, Coxeter numbers and Cartan determinants") {
        for (auto& kn : kKnown) {
            CAPTURE(kn.type);
            RootSystem rs(CartanType::parse(kn.type));
            CHECK(static_cast<int>(rs.positive().size()) == kn.positive);
            int top = 0;
            for (auto& r : rs.positive()) top = std::max(top, height(r));
            CHECK(top == kn.coxeter - 1);
            Matrix c(rs.rank(), QVec(rs.rank()));
            for (int i = 0; i < rs.rank(); ++i)
                for (int j = 0; j < rs.rank(); ++j) c[i][j] = rs.cartan_entry(i, j);
            CHECK(determinant(c) == kn.cartan_det);
        }
    }

    TEST_CASE("Cartan entries: diagonal 2, off-diagonal products in {0,1,2,3}") {
        for (auto& kn : kKnown) {
            RootSystem rs(CartanType::parse(kn.type));
            for (int i = 0; i < rs.rank(); ++i) {
                CHECK(rs.cartan_entry(i, i) == 2);
                for (int j = 0; j < rs.rank(); ++j) {
                    if (i == j) continue;
                    int p = rs.cartan_entry(i, j) * rs.cartan_entry(j, i);
                    CHECK(p >= 0);
                    CHECK(p <= 3);
                    CHECK((rs.cartan_entry(i, j) == 0) == (rs.cartan_entry(j, i) == 0));
                }
            }
        }
    }

    TEST_CASE("C2 has its long simple root last") {
        RootSystem rs(CartanType::parse("C2"));
        CHECK(rs.cartan_entry(0, 1) == -1);
        CHECK(rs.cartan_entry(1, 0) == -2);
        CHECK(rs.is_long(rs.simple(1)));
        CHECK_FALSE(rs.is_long(rs.simple(0)));
    }

    TEST_CASE("root strings: alpha + beta is a root exactly when the reflection pairing allows it") {
        for (auto name : {"A3", "C3", "G2", "F4"}) {
            RootSystem rs(CartanType::parse(name));
            auto all = rs.roots();
            for (auto& a : all) {
                Root neg(a.size());
                for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
                CHECK(rs.is_root(neg));
                for (auto& b : all) {
                    // reflection s_a(b) = b - <b,a^vee> a stays in R
                    Root s(b.size());
                    int p = rs.pairing(b, a);
                    for (size_t i = 0; i < b.size(); ++i) s[i] = b[i] - p * a[i];
                    CHECK(rs.is_root(s));
                }
            }
        }
    }

    TEST_CASE("type parsing and validation") {
        CHECK(CartanType::parse("c2").str() == "C2");
        CHECK_THROWS_AS(CartanType::parse("Z3"), std::invalid_argument);
        CHECK_THROWS_AS(CartanType::parse("A0"), std::invalid_argument);
        CHECK_THROWS_AS(CartanType::parse("E5"), std::invalid_argument);
        CHECK_THROWS_AS(CartanType::parse("G3"), std::invalid_argument);
        CHECK_THROWS_AS(CartanType::parse("A"), std::invalid_argument);
    }

    TEST_CASE("subset predicates") {
        RootSystem rs(CartanType::parse("A3"));
        auto pos = classify_subset(positive_subset(rs));
        CHECK(pos.closed);
        CHECK(pos.parabolic);
        CHECK_FALSE(pos.symmetric);
        auto lev = classify_subset(generated_subset(rs, {0, 2}));
        CHECK(lev.symmetric);
        CHECK(lev.closed);
        CHECK(generated_subset(rs, {0, 2}).members.size() == 4);
        CHECK(generated_subset(rs, {0, 1}).members.size() == 6);
    }

    TEST_CASE("Levi decomposition splits the positive roots") {
        for (auto name : {"A4", "C3", "D5", "E6"}) {
            RootSystem rs(CartanType::parse(name));
            for (int mask = 0; mask < (1 << rs.rank()); ++mask) {
                std::vector<int> theta;
                for (int i = 0; i < rs.rank(); ++i)
                    if (mask >> i & 1) theta.push_back(i);
                auto ld = levi_decomposition(rs, theta);
                CHECK(ld.levi_roots.size() / 2 + ld.nplus.size() == rs.positive().size());
                CHECK(ld.nplus.size() == ld.nminus.size());
                for (auto& r : ld.nplus) CHECK_FALSE(RootSystem::supported_in(r, theta));
            }
        }
    }

    TEST_CASE("complement") {
        CHECK(complement(5, {1, 3}) == std::vector<int>{0, 2, 4});
        CHECK(complement(3, {}) == std::vector<int>{0, 1, 2});
    }
}
