#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nucleuslab/spectral.hpp"

using namespace nlab;

namespace {

struct Instance {
    Graph g;
    DistanceData dd;
    DRCheck dr;
    SpectralData sd;
};

Instance make_instance(const FamilySpec& spec) {
    Instance inst{build_family(spec), {}, {}, {}};
    inst.dd = distance_data(inst.g);
    inst.dr = check_distance_regular(inst.g, inst.dd);
    REQUIRE(inst.dr.distance_regular);
    inst.sd = analyze_spectrum(inst.g, inst.dd, inst.dr);
    return inst;
}

std::vector<Rational> rats(const std::vector<long>& v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("hypercube spectrum") {
    Instance inst = make_instance({Family::Hypercube, 3});
    CHECK(inst.sd.theta == rats({3, 1, -1, -3}));
    CHECK(inst.sd.mult == std::vector<int>{1, 3, 3, 1});
    CHECK(inst.sd.q_polynomial);
}

TEST_CASE("C_2(2) spectrum and idempotents") {
    Instance inst = make_instance({Family::DualPolarC, 2, 2});
    CHECK(inst.sd.theta == rats({6, 1, -3}));
    CHECK(inst.sd.mult == std::vector<int>{1, 9, 5});

    CHECK(inst.sd.E[0] == make_rational(1, 15) * RatMatrix::all_ones(15));
    CHECK(rref(inst.sd.E[1]).rank == 9);

    // eigenspace of theta = -3 has dimension 5
    CHECK(eigenspace(inst.g.adjacency_matrix(), Rational(-3)).dim() == 5);
}

TEST_CASE("K_2 idempotents") {
    RatMatrix a(2, 2);
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    auto E = primitive_idempotents(a, {Rational(1), Rational(-1)});
    CHECK(E[0] == make_rational(1, 2) * RatMatrix::all_ones(2));
    CHECK(E[1] == RatMatrix::identity(2) - make_rational(1, 2) * RatMatrix::all_ones(2));
    CHECK_THROWS(primitive_idempotents(a, {Rational(1), Rational(1)}));
}

TEST_CASE("Krein pattern for C_2(2)") {
    Instance inst = make_instance({Family::DualPolarC, 2, 2});
    const auto& q = inst.sd.krein;
    CHECK(q[2][1][1] != 0);
    CHECK(q[2][0][1] == 0);
    // q^0_{ij} = 0 unless i = j
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            if (i != j) CHECK(q[0][i][j] == 0);
    // symmetry under i <-> j
    for (int h = 0; h <= 2; ++h)
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) CHECK(q[h][i][j] == q[h][j][i]);
}

TEST_CASE("Q-polynomial orderings") {
    Instance cube = make_instance({Family::Hypercube, 3});
    bool has_natural = false;
    for (const auto& ord : cube.sd.orderings_found)
        if (ord == std::vector<int>{0, 1, 2, 3}) has_natural = true;
    CHECK(has_natural);

    Instance odd = make_instance({Family::Odd, 3});
    CHECK(odd.sd.q_polynomial);
    CHECK(odd.sd.theta == rats({4, -3, 2, -1}));
}

TEST_CASE("base context dual eigenvalues") {
    Instance inst = make_instance({Family::DualPolarC, 2, 2});
    BaseContext ctx = base_context(inst.g, inst.dd, inst.dr, inst.sd, 0);
    CHECK(ctx.theta_star[0] == Rational(9));
    CHECK(ctx.theta_star[1] == make_rational(3, 2));
    CHECK(ctx.theta_star[2] == make_rational(-9, 4));
    // theta*_0 = m_1 always
    CHECK(ctx.theta_star[0] == Rational(inst.sd.mult[1]));

    CheckList checks = verify_algebra_relations(ctx);
    for (const auto& r : checks.results()) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.status != CheckStatus::Fail);
    }
}

TEST_CASE("hypercube dual eigenvalues are D - 2i") {
    Instance inst = make_instance({Family::Hypercube, 3});
    BaseContext ctx = base_context(inst.g, inst.dd, inst.dr, inst.sd, 0);
    CHECK(ctx.theta_star == rats({3, 1, -1, -3}));
    CHECK(rref(inst.dd.A[3]).rank == 8);  // A_D is a permutation matrix
}

TEST_CASE("integer spectrum rejects irrational spectra") {
    // Path P_4 has minimal polynomial with irrational roots.
    RatMatrix p4(4, 4);
    p4.at(0, 1) = p4.at(1, 0) = 1;
    p4.at(1, 2) = p4.at(2, 1) = 1;
    p4.at(2, 3) = p4.at(3, 2) = 1;
    CHECK_THROWS(integer_spectrum(p4));
}

TEST_CASE("B_2(3) closed-form spectrum") {
    Instance inst = make_instance({Family::DualPolarB, 2, 3});
    CHECK(inst.sd.theta == dual_polar_thetas(inst.g));
    BaseContext ctx = base_context(inst.g, inst.dd, inst.dr, inst.sd, 0);
    CHECK(ctx.theta_star == dual_polar_dual_thetas(inst.g));
}
