#include "weightcat/lie.hpp"

#include <doctest.h>

using namespace weightcat;

namespace {

bool is_zero(const LieElement& x) { return x.empty(); }

}  // namespace

TEST_SUITE("lie") {
    TEST_CASE("dimensions of sl_{n+1} and sp_{2n}") {
        for (int n = 1; n <= 4; ++n) {
            CHECK(LieAlgebra(CartanType{Family::A, n}).dim() == n * (n + 2));
            if (n >= 2) CHECK(LieAlgebra(CartanType{Family::C, n}).dim() == n * (2 * n + 1));
        }
        CHECK_THROWS_AS(LieAlgebra(CartanType{Family::B, 3}), std::invalid_argument);
    }

    TEST_CASE("the realization is a Lie homomorphism into the Weyl algebra") {
        for (auto name : {"A3", "C3"}) {
            LieAlgebra g(CartanType::parse(name));
            for (int x = 0; x < g.dim(); ++x)
                for (int y = 0; y < g.dim(); ++y) {
                    WeylPoly lhs = commutator(g.realize(x), g.realize(y));
                    CHECK((lhs - g.realize(g.bracket(x, y))).is_zero());
                }
        }
    }

    TEST_CASE("Jacobi identity and antisymmetry on basis triples") {
        for (auto name : {"A2", "C2"}) {
            LieAlgebra g(CartanType::parse(name));
            for (int x = 0; x < g.dim(); ++x)
                for (int y = 0; y < g.dim(); ++y) {
                    CHECK(is_zero(lin_comb(g.bracket(x, y), 1, g.bracket(y, x))));
                    for (int z = 0; z < g.dim(); ++z) {
                        LieElement X = basis_element(x), Y = basis_element(y), Z = basis_element(z);
                        LieElement j = g.bracket(X, g.bracket(Y, Z));
                        j = lin_comb(j, 1, g.bracket(Y, g.bracket(Z, X)));
                        j = lin_comb(j, 1, g.bracket(Z, g.bracket(X, Y)));
                        CHECK(is_zero(j));
                    }
                }
        }
    }

    TEST_CASE("root vectors are eigenvectors of the Cartan elements") {
        for (auto name : {"A3", "C3"}) {
            LieAlgebra g(CartanType::parse(name));
            for (int b = 0; b < 2 * g.npos(); ++b)
                for (int i = 0; i < g.rank(); ++i) {
                    LieElement br = g.bracket(g.cartan(i), b);
                    int v = g.root_value(g.root(b), i);
                    CHECK(is_zero(lin_comb(br, -v, basis_element(b))));
                }
        }
    }

    TEST_CASE("[X_alpha, X_-alpha] is the coroot up to scale and lies in h") {
        LieAlgebra g(CartanType::parse("C3"));
        for (int b = 0; b < g.npos(); ++b) {
            LieElement h = g.bracket(b, g.opposite(b));
            REQUIRE_FALSE(is_zero(h));
            for (auto& [idx, c] : h) CHECK(g.is_cartan(idx));
            // alpha(h_alpha) = 2 for the coroot
            LieElement co = g.coroot(g.root(b));
            LieElement act = g.bracket(co, basis_element(b));
            CHECK(is_zero(lin_comb(act, -2, basis_element(b))));
        }
    }

    TEST_CASE("decompose inverts realize") {
        LieAlgebra g(CartanType::parse("A2"));
        for (int b = 0; b < g.dim(); ++b) CHECK(g.decompose(g.realize(b)) == basis_element(b));
    }
}
