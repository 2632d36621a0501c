#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nucleuslab/forms.hpp"
#include "nucleuslab/rat_matrix.hpp"

namespace nlab {

enum class Family {
    Hypercube,
    Hamming,
    Odd,
    DualPolarB,
    DualPolarC,
    DualPolarD,
    DualPolar2AEven,
    DualPolar2AOdd,
    Imported,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
bool family_is_dual_polar(Family f);

struct FamilySpec {
    Family family = Family::Hypercube;
    int D = 1;
    unsigned long q = 2;  // dual polar: the defining prime power p^n
    int N = 2;            // Hamming alphabet size
};

/// Extra data carried by dual polar graphs: the formed space, the vertex
/// subspaces, and the parameters entering the closed-form identities.
struct DualPolarInfo {
    FieldPtr field;
    std::shared_ptr<const FormSpec> form;
    std::vector<FFSubspace> vertices;
    Integer q;        // the q of the parameter formulas (p^n, or p^(2n) for 2A)
    Integer a1;       // q^(e+1) - 1
    int e_times_2;    // 2e in {-2, -1, 0, 1, 2}
    /// q^(k + e_num/2) as an exact rational (k integer, e_num in halves of e).
    Rational q_half_power(int twice_exponent) const;
};

struct Graph {
    FamilySpec spec;
    std::vector<std::string> labels;        // canonical, lexicographically sorted
    std::vector<std::vector<int>> adj;      // sorted neighbor lists
    std::optional<DualPolarInfo> dual_polar;

    int num_vertices() const { return static_cast<int>(adj.size()); }
    bool is_dual_polar() const { return dual_polar.has_value(); }
    bool nonbipartite_dual_polar() const { return is_dual_polar() && dual_polar->a1 > 0; }
    bool adjacent(int u, int v) const;
    RatMatrix adjacency_matrix() const;
};

/// Build one of the supported families with the canonical vertex order.
Graph build_family(const FamilySpec& spec);

/// Arbitrary graph from an edge list (analysis mode, no family guarantees).
Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                       std::vector<std::string> labels = {});

struct DistanceData {
    int D = 0;
    std::vector<std::vector<int>> dist;
    std::vector<RatMatrix> A;  // distance matrices A_0..A_D
};

/// BFS all-pairs distances; throws on a disconnected graph.
DistanceData distance_data(const Graph& g);

struct DRWitness {
    int x, y, h, i, j;
    long expected, got;
    std::string describe() const;
};

struct DRCheck {
    bool distance_regular = false;
    std::optional<DRWitness> witness;
    // Filled when distance_regular holds:
    std::vector<std::vector<std::vector<long>>> p;  // p[h][i][j]
    std::vector<long> c, a, b, k;
    bool triangle_pattern_ok = false;
    std::optional<std::string> triangle_pattern_failure;
};

DRCheck check_distance_regular(const Graph& g, const DistanceData& dd);

struct ParameterMismatch {
    std::string array;
    int index;
    std::string expected, got;
};

struct DualPolarReport {
    bool ok = true;
    std::vector<ParameterMismatch> mismatches;
};

/// Measured intersection numbers against the closed forms for dual polar
/// graphs: c_i = [i]_q, a_i = a1 [i]_q, b_i = (a1+1)(q^D - q^i)/(q-1),
/// k_i = (a1+1)^i q^binom(i,2) [D choose i]_q.
DualPolarReport verify_dual_polar_parameters(const Graph& g, const DRCheck& dr);

}  // namespace nlab
