#pragma once

#include <memory>

#include "nucleuslab/checks.hpp"
#include "nucleuslab/graph.hpp"
#include "nucleuslab/subspace.hpp"

namespace nlab {

using KreinTensor = std::vector<std::vector<std::vector<Rational>>>;

struct EigenData {
    Rational theta;
    int mult;
    Subspace space;
};

/// Distinct integer eigenvalues with multiplicities and eigenspaces, sorted by
/// descending eigenvalue. Throws if the spectrum is not integral (the
/// eigenspace dimensions then fail to exhaust the standard module).
std::vector<EigenData> integer_spectrum(const RatMatrix& A,
                                        const std::vector<Rational>& candidates = {});

/// Integer eigenvalue candidates read off the intersection-array quotient
/// matrix; exact and complete for integral spectra.
std::vector<Rational> eigenvalue_candidates(const DRCheck& dr);

/// Lagrange interpolation idempotents E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j).
std::vector<RatMatrix> primitive_idempotents(const RatMatrix& A,
                                             const std::vector<Rational>& thetas);

/// Krein parameters via trace extraction:
/// q^h_{ij} = |X| tr((E_i o E_j) E_h) / m_h. Throws on a negative parameter.
KreinTensor krein_parameters(const std::vector<RatMatrix>& E, const std::vector<int>& mult);

/// All idempotent orderings (permutations fixing index 0) satisfying the
/// Q-polynomial zero/nonzero pattern of the Krein tensor.
std::vector<std::vector<int>> q_poly_orderings(const KreinTensor& krein);

bool q_poly_pattern_ok(const KreinTensor& krein, const std::vector<int>& order);

struct SpectralData {
    // Everything below is in the chosen Q-polynomial order.
    std::vector<Rational> theta;
    std::vector<int> mult;
    std::vector<Subspace> eigenspaces;
    std::vector<RatMatrix> E;
    KreinTensor krein;
    std::vector<std::vector<int>> orderings_found;  // permutations of the natural (descending) order
    std::vector<int> chosen_order;                  // natural index per position
    bool q_polynomial = false;
};

/// Natural spectrum, idempotents, Krein tensor, Q-polynomial search, and the
/// canonical reordering (closed-form order for dual polar, first valid
/// ordering otherwise).
SpectralData analyze_spectrum(const Graph& g, const DistanceData& dd, const DRCheck& dr);

/// Closed-form eigenvalues theta_i for a dual polar graph.
std::vector<Rational> dual_polar_thetas(const Graph& g);
/// Closed-form dual eigenvalues theta*_i for a dual polar graph.
std::vector<Rational> dual_polar_dual_thetas(const Graph& g);

struct BaseContext {
    std::shared_ptr<const Graph> graph;
    DistanceData dist;
    DRCheck dr;
    SpectralData spec;
    int x = 0;

    RatMatrix A;
    std::vector<std::vector<int>> sphere;     // sphere[i] = vertices at distance i from x
    std::vector<std::vector<Rational>> astar_diag;  // diagonals of A*_0..A*_D
    std::vector<Rational> theta_star;

    int D() const { return dist.D; }
    int n() const { return graph->num_vertices(); }
    int dist_to_x(int y) const { return dist.dist[x][y]; }

    RatMatrix estar_matrix(int i) const;
    RatMatrix astar_matrix(int i) const;
    const RatMatrix& E(int i) const { return spec.E[i]; }

    /// Coordinate slice: zero out all coordinates of v outside sphere i.
    std::vector<Rational> estar_apply(int i, const std::vector<Rational>& v) const;
    Subspace estar_image(int i, const Subspace& s) const;

    /// E*_0 V + ... + E*_i V (span of coordinates within distance i of x).
    Subspace coordinate_prefix(int i) const;
    /// E_0 V + ... + E_j V in the Q-polynomial order.
    Subspace spectral_prefix(int j) const;
};

/// Assemble the base-vertex data; certifies the A* diagonal is constant on
/// every sphere and that the dual eigenvalues are mutually distinct.
BaseContext base_context(const Graph& g, DistanceData dd, DRCheck dr, SpectralData sd, int x);

/// Algebra relations at the base vertex: triple products for h = 1 and h = D,
/// invertibility of A_D and A*_D, the dual Bose-Mesner identities, and (dual
/// polar only) the closed-form eigenvalues on both sides.
CheckList verify_algebra_relations(const BaseContext& ctx);

}  // namespace nlab
