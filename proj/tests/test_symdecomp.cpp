#include <doctest.h>

#include "fracdec/symmetric_decomp.hpp"

using namespace fracdec;

TEST_CASE("coefficient matrices, pinned") {
    CoeffMatrix a23 = build_matrix(3, 2);
    CHECK(a23.a == std::vector<std::vector<std::uint64_t>>{{2, 2}, {0, 3}});
    CoeffMatrix a34 = build_matrix(4, 3);
    CHECK(a34.a == std::vector<std::vector<std::uint64_t>>{{6, 3, 0}, {0, 7, 2}, {0, 0, 8}});
}

TEST_CASE("solved weights, pinned") {
    CHECK(solve_weights(3, 2) == std::vector<Rat>{rat(1, 6), rat(1, 3)});
    CHECK(solve_weights(4, 3) == std::vector<Rat>{rat(19, 168), rat(3, 28), rat(1, 8)});
    // last weight is the reciprocal of the last diagonal entry
    for (int r = 2; r <= 4; ++r)
        for (int q = r + 1; r * q <= 20; ++q) {
            CoeffMatrix a = build_matrix(q, r);
            std::vector<Rat> w = solve_weights(q, r);
            CHECK(w[r - 1] == Rat(1) / Rat(static_cast<long>(a.a[r - 1][r - 1])));
            // A w = 1 exactly
            for (int t = 0; t < r; ++t) {
                Rat acc = 0;
                for (int i = t; i < r; ++i) acc += Rat(static_cast<long>(a.a[t][i])) * w[i];
                CHECK(acc == 1);
            }
        }
}

TEST_CASE("complete symmetric decomposition") {
    PackingView p46 = complete_symmetric(6, 3, 2);
    CHECK(p46.entries().size() == binom(6, 3));
    CHECK(p46.entries().front().weight == rat(1, 4));
    CHECK(validate(p46, Rat(0)).pass);

    CHECK(complete_symmetric(4, 3, 2).entries().front().weight == rat(1, 2));
    PackingView p12 = complete_symmetric(12, 4, 3);
    CHECK(p12.entries().front().weight == rat(1, 9));
    CHECK(validate(p12, Rat(0)).pass);
    CHECK_THROWS(complete_symmetric(3, 4, 2));  // q > n
}

TEST_CASE("missing-edge packing boundary values") {
    PackingView p = missing_edge_packing(3, 2, {0, 1});
    // f = {0,2}: three triangles {0,2,x}, all with one vertex on e
    CHECK(p.boundary({0, 2}) == 1);
    // f = {2,3}: two i=1 and two i=0 triangles
    CHECK(p.boundary({2, 3}) == 1);
    CHECK(validate(p, Rat(0)).pass);
    CHECK(validate(missing_edge_packing(4, 3, {1, 5, 7}), Rat(0)).pass);
}
