#pragma once

#include "nucleuslab/nucleus.hpp"

namespace nlab {

/// Partition of X into the ~ classes: same distance from x and same connected
/// component of the sphere; for dual polar graphs equivalently the same x^y.
struct EquivClasses {
    // classes[i] lists the classes inside sphere i as sorted vertex lists.
    std::vector<std::vector<std::vector<int>>> classes;
    // keys[i][c] = the common intersection x ^ y over y in the class.
    std::vector<std::vector<FFSubspace>> keys;
    CheckList cert;
};

/// Classes computed twice (components, and grouping on x ^ y) and certified
/// identical; class sizes and counts checked against the closed forms.
EquivClasses sim_classes(const BaseContext& ctx);

/// The projective geometry L_D(q) on the subspaces of the base vertex.
struct PosetP {
    std::vector<FFSubspace> elements;        // canonical order
    std::vector<int> grade;                  // grade i <=> dim = D - i
    std::vector<std::vector<int>> by_grade;  // grade -> element indices
    std::vector<std::vector<int>> up;        // adjacent elements one grade up (toward P_{i+1})
    std::vector<std::vector<int>> down;      // adjacent elements one grade down
    std::vector<std::vector<Rational>> etaN;  // characteristic vector of {y : x ^ y = eta}
    RatMatrix M{0, 0};                        // weighted operator, filled by pmain_operator
    CheckList cert;
};

/// Enumerate P, grade it, certify the cover counts [i]_q / [D-i]_q and the
/// grade sizes [D choose i]_q, build the eta -> eta^N vectors, and certify the
/// bijection onto the class characteristic vectors.
PosetP build_poset(const BaseContext& ctx, const EquivClasses& classes);

struct WGCSubgraph {
    std::vector<int> vertices;  // sorted
    int diameter = 0;
    std::vector<long> c, a;     // measured intersection numbers of the subgraph
    CheckList cert;
};

/// Subgraph on the vertices containing eta; certified weak-geodetically
/// closed, distance-regular with c_i(Omega) = c_i and a_i(Omega) = a_i, and
/// equal on its top sphere to the class keyed by eta.
WGCSubgraph eta_vee(const BaseContext& ctx, const FFSubspace& eta);

/// Fixpoint closure of {y, z} under the weak-geodesic condition; certified to
/// keep diameter d(y,z) and, when x lies inside, to agree with eta_vee(x ^ y').
WGCSubgraph wgc_closure(const BaseContext& ctx, int y, int z);

/// The bijection Omega -> Omega ^ Gamma_i(x) between diameter-i WGC subgraphs
/// through x and the components of the sphere.
CheckList verify_ns2(const BaseContext& ctx, const PosetP& poset, int i);

/// Fill poset.M with the closed-form operator and certify, on the nucleus
/// basis: A eta^N = sum_zeta M[zeta][eta] zeta^N, A* eta^N = theta*_i eta^N,
/// and the vertexwise equitable-partition constants.
CheckList pmain_operator(const BaseContext& ctx, PosetP& poset);

}  // namespace nlab
