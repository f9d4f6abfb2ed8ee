#include <doctest.h>

#include "fracdec/lp.hpp"
#include "fracdec/symmetric_decomp.hpp"

using namespace fracdec;

namespace {

std::vector<std::vector<Rat>> dense(const LPInstance& l) {
    std::vector<std::vector<Rat>> a(l.rows, std::vector<Rat>(l.col_count(), Rat(0)));
    for (std::size_t c = 0; c < l.col_count(); ++c)
        for (const auto& [row, v] : l.cols[c]) a[row][c] = v;
    return a;
}

}  // namespace

TEST_CASE("feasible system with verified certificate") {
    Hypergraph k4 = Hypergraph::complete(4, 2);
    LPInstance l = build_feasibility_lp(k4, 3);
    CHECK(l.rows == 6);
    CHECK(l.col_count() == 4);

    SolveResult res = feasible(l);
    REQUIRE(res.status == SolveResult::Status::feasible);
    REQUIRE(res.cert);
    CHECK(verify_certificate(l, *res.cert));

    // the uniform weights of the symmetric decomposition also certify it
    Certificate uniform = certificate_from_entries(l, complete_symmetric(4, 3, 2).entries());
    CHECK(verify_certificate(l, uniform));
    for (const Rat& x : uniform.solution) CHECK(x == rat(1, 2));

    // a perturbed solution must be rejected
    Certificate broken = *res.cert;
    broken.solution[0] += rat(1, 7);
    CHECK_FALSE(verify_certificate(l, broken));
}

TEST_CASE("infeasible system with Farkas certificate") {
    // a 4-cycle has no triangle at all: zero columns, rhs = 1
    Hypergraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    LPInstance l = build_feasibility_lp(c4, 3);
    CHECK(l.col_count() == 0);
    SolveResult res = feasible(l);
    REQUIRE(res.status == SolveResult::Status::infeasible);
    REQUIRE(res.cert);
    CHECK(res.cert->kind == Certificate::Kind::infeasible);
    CHECK(verify_certificate(l, *res.cert));

    // a graph whose triangles cannot cover a pendant edge
    Hypergraph pendant(4, 2, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    SolveResult res2 = feasible(build_feasibility_lp(pendant, 3));
    CHECK(res2.status == SolveResult::Status::infeasible);
}

TEST_CASE("budget exhaustion is reported distinctly") {
    Hypergraph k6 = Hypergraph::complete(6, 2);
    LPInstance l = build_feasibility_lp(k6, 3);
    CHECK(feasible(l, 1000000, 3).status == SolveResult::Status::budget_exceeded);
    CHECK(feasible(l, 1).status == SolveResult::Status::budget_exceeded);
}

TEST_CASE("orbit reduction recovers the coefficient matrix") {
    // K_6^2 - e
    VertexSet e2{4, 5};
    Hypergraph g2 = Hypergraph::complete_minus_edge(6, 2, e2);
    LPInstance l2 = build_feasibility_lp(g2, 3);
    LPInstance r2 = orbit_reduce(l2, edge_intersection_signature(l2, e2));
    CHECK(r2.rows == 2);
    CHECK(r2.col_count() == 2);
    auto a2 = dense(r2);
    CoeffMatrix m2 = build_matrix(3, 2);
    for (int t = 0; t < 2; ++t)
        for (int i = 0; i < 2; ++i)
            CHECK(a2[t][i] == Rat(static_cast<long>(m2.a[t][i])));

    // K_12^3 - e
    VertexSet e3{9, 10, 11};
    Hypergraph g3 = Hypergraph::complete_minus_edge(12, 3, e3);
    LPInstance l3 = build_feasibility_lp(g3, 4);
    LPInstance r3 = orbit_reduce(l3, edge_intersection_signature(l3, e3));
    CHECK(r3.rows == 3);
    CHECK(r3.col_count() == 3);
    auto a3 = dense(r3);
    CoeffMatrix m3 = build_matrix(4, 3);
    for (int t = 0; t < 3; ++t)
        for (int i = 0; i < 3; ++i)
            CHECK(a3[t][i] == Rat(static_cast<long>(m3.a[t][i])));
}

TEST_CASE("orbit-reduced verdict matches the full verdict") {
    VertexSet e{0, 1};
    for (int n : {6, 7, 8}) {
        Hypergraph g = Hypergraph::complete_minus_edge(n, 2, e);
        LPInstance l = build_feasibility_lp(g, 3);
        SolveResult full = feasible(l);
        LPInstance red = orbit_reduce(l, edge_intersection_signature(l, e));
        SolveResult small = feasible(red);
        CHECK(full.status == small.status);
        if (small.cert) CHECK(verify_certificate(red, *small.cert));
    }

    Matching m{{{0, 1}, {2, 3}}};
    Hypergraph gm = Hypergraph::complete_minus_matching(8, 2, m);
    LPInstance lm = build_feasibility_lp(gm, 3);
    SolveResult full = feasible(lm);
    LPInstance red = orbit_reduce(lm, matching_signature(lm, m));
    CHECK(red.col_count() < lm.col_count());
    SolveResult small = feasible(red);
    CHECK(full.status == small.status);
}
