#include "weightcat/degone.hpp"
#include "weightcat/induce.hpp"

#include <doctest.h>

using namespace weightcat;

namespace {

std::shared_ptr<const LieAlgebra> alg(const char* t) { return LieAlgebra::make(t); }

// dimension of the simple quotient of the Verma module, summed over lowering words f_{i1}...f_{ir} v
int zero_power(const VermaModule& V, int neg, int max) {
    for (int m = 1; m <= max; ++m)
        if (V.zero_in_L(V.word(std::vector<int>(m, neg), {}))) return m;
    return -1;
}

}  // namespace

TEST_SUITE("induce") {
    TEST_CASE("sl2 Verma module: f^(n+1) v is singular exactly for dominant integral n") {
        auto g = alg("A1");
        int f = g->simple_neg(0);
        for (int n = 0; n <= 3; ++n) {
            auto C = std::make_shared<CharacterModule>(g, QVec{Q(n)});
            VermaModule V(C, {}, 5);
            CHECK(zero_power(V, f, 5) == n + 1);
        }
        for (Q lam : {frac(1, 2), Q(-1), Q(-3)}) {
            auto C = std::make_shared<CharacterModule>(g, QVec{lam});
            VermaModule V(C, {}, 5);
            CHECK(zero_power(V, f, 5) == -1);
        }
    }

    TEST_CASE("sl3 with highest weight (1,0): the standard representation") {
        auto g = alg("A2");
        auto C = std::make_shared<CharacterModule>(g, QVec{1, 0});
        VermaModule V(C, {}, 4);
        int f1 = g->simple_neg(0), f2 = g->simple_neg(1);
        CHECK_FALSE(V.zero_in_L(V.word({f1}, {})));
        CHECK(V.zero_in_L(V.word({f1, f1}, {})));
        CHECK(V.zero_in_L(V.word({f2}, {})));
        CHECK_FALSE(V.zero_in_L(V.word({f2, f1}, {})));
        CHECK(V.zero_in_L(V.word({f1, f2, f1}, {})));
    }

    TEST_CASE("the raising operators act by the Cartan values on the top vector") {
        auto g = alg("A2");
        auto C = std::make_shared<CharacterModule>(g, QVec{frac(1, 2), frac(2, 3)});
        VermaModule V(C, {}, 3);
        int e1 = g->simple_pos(0), f1 = g->simple_neg(0);
        // e f v = [e,f] v = lambda(H_1) v
        InducedVector efv = V.act(e1, V.word({f1}, {}));
        InducedVector v = V.one({});
        auto r = proportionality(efv, v);
        REQUIRE(r.has_value());
        CHECK(((*r == frac(1, 2)) || (*r == 2)));
        CHECK(proportionality(v, v) == std::optional<Q>(Q(1)));
    }

    TEST_CASE("express recovers a known combination") {
        auto g = alg("A2");
        auto C = std::make_shared<CharacterModule>(g, QVec{frac(1, 3), frac(1, 5)});
        VermaModule V(C, {}, 3);
        int f1 = g->simple_neg(0), f2 = g->simple_neg(1);
        InducedVector a = V.word({f1, f2}, {}), b = V.word({f2, f1}, {});
        InducedVector u;
        add_to(u, a, 3);
        add_to(u, b, frac(-1, 2));
        auto x = express(V, u, {a, b});
        REQUIRE(x.has_value());
        CHECK(*x == QVec{3, frac(-1, 2)});
    }

    TEST_CASE("center of a Levi subalgebra") {
        auto g = alg("A3");
        CHECK(levi_center(*g, {0}).size() == 2);
        CHECK(levi_center(*g, {0, 1}).size() == 1);
        CHECK(levi_center(*g, {}).size() == 3);
    }

    TEST_CASE("truncation: words longer than the depth are refused") {
        auto g = alg("A2");
        auto C = std::make_shared<CharacterModule>(g, QVec{frac(1, 2), frac(1, 3)});
        VermaModule V(C, {}, 2);
        int f1 = g->simple_neg(0);
        CHECK_THROWS_AS(V.word({f1, f1, f1}, {}), TruncationError);
    }

    TEST_CASE("U(g)_0 scalars: N(a1,a2,0) against the induced module of its top l-module") {
        auto g = alg("A2");
        QVec a{frac(1, 2), frac(1, 3), 0};
        auto C = levi_module(g, {0}, a);
        auto N = build(parse_spec("N", "1/2,1/3,0"));
        VermaModule V(C, {0}, 3);
        Lattice k0{0, 0, 0};
        REQUIRE(C->weight(k0) == N->weight(k0));
        auto same = u0_compare(scalar_action(V, k0), scalar_action(*N, k0), *g, 2);
        CHECK(same.equal);
        CHECK(same.words > 0);
        // a different central character is detected
        auto other = build(parse_spec("N", "1/2,1/3,0"));
        auto C2 = levi_module(g, {0}, {frac(1, 2), frac(1, 3), frac(1, 7)});
        VermaModule V2(C2, {0}, 3);
        CHECK_FALSE(u0_compare(scalar_action(V2, k0), scalar_action(*other, k0), *g, 2).equal);
    }

    TEST_CASE("the restriction probe fires on a C2 short-root Levi") {
        auto g = alg("C2");
        auto C = levi_module(g, {0}, sample_levi_params(*g, {0}, 1));
        auto rep = probe_restriction_failure(C, {0}, 3);
        CHECK(rep.restriction_impossible);
        CHECK(rep.witness_found);
    }
}
