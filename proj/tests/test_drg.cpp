#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nucleuslab/graph.hpp"

using namespace nlab;

TEST_CASE("hypercube construction") {
    Graph g = build_family({Family::Hypercube, 3});
    CHECK(g.num_vertices() == 8);
    for (const auto& row : g.adj) CHECK(row.size() == 3);
    CHECK(g.labels[0] == "000");
    CHECK(g.labels[7] == "111");

    DistanceData dd = distance_data(g);
    CHECK(dd.D == 3);
    CHECK(dd.dist[0][7] == 3);  // antipodal pair
}

TEST_CASE("C_2(2) is the 15-vertex generalized quadrangle") {
    Graph g = build_family({Family::DualPolarC, 2, 2});
    CHECK(g.num_vertices() == 15);
    for (const auto& row : g.adj) CHECK(row.size() == 6);
    CHECK(g.dual_polar->a1 == 1);
    CHECK(g.dual_polar->q == 2);

    DistanceData dd = distance_data(g);
    DRCheck dr = check_distance_regular(g, dd);
    REQUIRE(dr.distance_regular);
    CHECK(dr.triangle_pattern_ok);
    CHECK(dr.c == std::vector<long>{0, 1, 3});
    CHECK(dr.a == std::vector<long>{0, 1, 3});
    CHECK(dr.b == std::vector<long>{6, 4, 0});
    CHECK(dr.k == std::vector<long>{1, 6, 8});

    CHECK(verify_dual_polar_parameters(g, dr).ok);
}

TEST_CASE("odd graph O_4") {
    Graph g = build_family({Family::Odd, 3});
    CHECK(g.num_vertices() == 35);
    for (const auto& row : g.adj) CHECK(row.size() == 4);
    DistanceData dd = distance_data(g);
    CHECK(dd.D == 3);
    CHECK(check_distance_regular(g, dd).distance_regular);
}

TEST_CASE("C_3(2) census") {
    Graph g = build_family({Family::DualPolarC, 3, 2});
    CHECK(g.num_vertices() == 135);
    DistanceData dd = distance_data(g);
    CHECK(dd.D == 3);
    DRCheck dr = check_distance_regular(g, dd);
    REQUIRE(dr.distance_regular);
    CHECK(dr.k == std::vector<long>{1, 14, 56, 64});
    CHECK(verify_dual_polar_parameters(g, dr).ok);
}

TEST_CASE("K_3 distance data") {
    Graph g = graph_from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    DistanceData dd = distance_data(g);
    CHECK(dd.D == 1);
    CHECK(dd.A[1] == RatMatrix::all_ones(3) - RatMatrix::identity(3));
}

TEST_CASE("P_3 is rejected with a witness") {
    Graph g = graph_from_edges(3, {{0, 1}, {1, 2}});
    DistanceData dd = distance_data(g);
    DRCheck dr = check_distance_regular(g, dd);
    CHECK_FALSE(dr.distance_regular);
    REQUIRE(dr.witness.has_value());
    CHECK_FALSE(dr.witness->describe().empty());
}

TEST_CASE("hypercube intersection array") {
    Graph g = build_family({Family::Hypercube, 3});
    DRCheck dr = check_distance_regular(g, distance_data(g));
    REQUIRE(dr.distance_regular);
    CHECK(dr.c == std::vector<long>{0, 1, 2, 3});
    CHECK(dr.b == std::vector<long>{3, 2, 1, 0});
    CHECK(dr.a == std::vector<long>{0, 0, 0, 0});
}

TEST_CASE("B_2(3) and D_2(2) parameters") {
    Graph b = build_family({Family::DualPolarB, 2, 3});
    CHECK(b.num_vertices() == 40);
    DRCheck dr = check_distance_regular(b, distance_data(b));
    REQUIRE(dr.distance_regular);
    CHECK(dr.k[1] == 12);
    CHECK(dr.k[2] == 27);
    CHECK(b.dual_polar->a1 == 2);
    CHECK(verify_dual_polar_parameters(b, dr).ok);

    Graph d = build_family({Family::DualPolarD, 2, 2});
    CHECK(d.num_vertices() == 6);  // K_{3,3}
    CHECK(d.dual_polar->a1 == 0);
    CHECK_FALSE(d.nonbipartite_dual_polar());
    DRCheck ddr = check_distance_regular(d, distance_data(d));
    REQUIRE(ddr.distance_regular);
    CHECK(ddr.k == std::vector<long>{1, 3, 2});
    CHECK(verify_dual_polar_parameters(d, ddr).ok);
}

TEST_CASE("hermitean families (2A)") {
    // 2A_{2D-1}(2) with D = 2: ambient GF(4)^4, 45 vertices.
    Graph g = build_family({Family::DualPolar2AOdd, 2, 2});
    CHECK(g.dual_polar->q == 4);
    CHECK(g.dual_polar->a1 == 1);  // q^(1/2) - 1 = 2 - 1
    DRCheck dr = check_distance_regular(g, distance_data(g));
    REQUIRE(dr.distance_regular);
    CHECK(verify_dual_polar_parameters(g, dr).ok);
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS(build_family({Family::DualPolarC, 2, 6}));
    CHECK_THROWS(build_family({Family::Hamming, 2, 2, 1}));
    CHECK_THROWS(build_family({Family::Hypercube, 0}));
}
