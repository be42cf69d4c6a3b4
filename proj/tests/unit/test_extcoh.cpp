#include "weightcat/extcoh.hpp"

#include <doctest.h>

using namespace weightcat;

namespace {

ModuleHandle sl2(const char* a) { return build(parse_spec("N", a)); }

}  // namespace

TEST_SUITE("extcoh") {
    TEST_CASE("the sl2 cocycle inverts the lowering operator") {
        auto M = sl2("1/2,1/3");
        const LieAlgebra& g = M->algebra();
        Cocycle c = make_sl2_cocycle(1, M);
        int xp = g.simple_pos(0);
        // x(k) sits at lattice point (k,-k)
        for (int k = -2; k <= 2; ++k) {
            auto v = c.apply(xp, Lattice{k, -k});
            REQUIRE(v.has_value());
            REQUIRE(v->size() == 1);
            CHECK(v->begin()->first == Lattice{k + 1, -k - 1});
            CHECK(v->begin()->second == 1 / (frac(1, 2) + k + 1));
        }
        CHECK(check_cocycle(c, 3).ok());
        CHECK_FALSE(is_coboundary(c, 3).has_value());
    }

    TEST_CASE("coboundaries are cocycles and are recognized as such") {
        for (auto a : {"1/2,1/3", "-1,1/2,1/3,0"}) {
            auto M = build(parse_spec("N", a));
            for (unsigned seed = 1; seed <= 3; ++seed) {
                Cocycle c = make_coboundary(M, M, random_degree_zero(M, M, seed));
                CHECK(check_cocycle(c, 2).ok());
                CHECK(is_coboundary(c, 2).has_value());
            }
        }
    }

    TEST_CASE("a non-cocycle table is caught with a witness") {
        auto M = sl2("1/2,1/3");
        const LieAlgebra& g = M->algebra();
        std::map<std::pair<int, Lattice>, Vec> table;
        table[{g.simple_neg(0), Lattice{0, 0}}] = Vec{{Lattice{-1, 1}, Q(1)}};
        Cocycle c = table_cocycle(M, M, table, 3);
        auto chk = check_cocycle(c, 3);
        CHECK_FALSE(chk.ok());
        CHECK_THROWS_AS(build_extension(c, 3), CocycleError);
    }

    TEST_CASE("extension modules are modules with intertwining inclusion and projection") {
        auto M = sl2("1/2,1/3");
        ModuleHandle V = build_extension(make_sl2_cocycle(frac(2, 3), M), 3);
        auto& ext = dynamic_cast<const ExtensionModule&>(*V);
        CHECK(extension_maps_ok(ext, 2));
        std::vector<int> all;
        for (int b = 0; b < V->algebra().dim(); ++b) all.push_back(b);
        CHECK(bracket_fidelity(*V, 2, all).ok());
        CHECK(degree_on_window(*V, 2) == 2);
    }

    TEST_CASE("sl2 self-extension quotient is one-dimensional and window stable") {
        auto M = sl2("1/2,1/3");
        CHECK(cocycle_quotient(M, M, 3).quotient() == 1);
        CHECK(cocycle_quotient(M, M, 4).quotient() == 1);
        auto N = sl2("1/3,1/2");
        CHECK(cocycle_quotient(M, N, 3).quotient() == 0);
    }

    TEST_CASE("type A Ext systems") {
        auto a = parse_spec("N", "-1,1/2,1/3,0");
        auto sys = ext_solve_typeA(a, a, 3);
        CHECK(sys.mode == "self");
        CHECK(sys.dimension == 0);
        CHECK(sys.boundary_rows > 0);
        auto b = parse_spec("N", "-1,1/3,1/2,0");
        CHECK(ext_solve_typeA(a, b, 3).dimension == 0);
        CHECK(ext_solve_typeA(a, b, 3).mode != "self");
        CHECK_THROWS_AS(ext_solve_typeA(a, a, 0), CertificationImpossible);
    }

    TEST_CASE("type C Ext systems") {
        auto a = parse_spec("M", "-1,1/2");
        auto sys = ext_solve_typeC(a, a, 3);
        CHECK(sys.dimension == 0);
        auto b = parse_spec("M", "-1,1/3");
        CHECK(ext_solve_typeC(a, b, 3).dimension == 0);
        CHECK(ext_solve_typeC(a, a, 4).dimension == 0);
    }

    TEST_CASE("support disjointness") {
        auto a = build(parse_spec("N", "-1,1/2,1/3,0"));
        auto b = build(parse_spec("N", "-1,1/5,1/7,0"));
        CHECK(support_disjoint(*a, *b, 2));
        CHECK_FALSE(support_disjoint(*a, *a, 2));
    }
}
