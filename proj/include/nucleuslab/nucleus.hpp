#pragma once

#include "nucleuslab/tmodule.hpp"

namespace nlab {

enum class EstarMethod { Projection, LocalSpectral, Components };

struct NucleusData {
    std::vector<Subspace> Ni;      // 0..D
    Subspace N{0};
    std::vector<Subspace> estarN;  // E*_i N
    std::vector<Subspace> eN;      // E_i N
    std::vector<int> mult;         // 0..floor(D/2)
    std::vector<TModuleData> modules;
    CheckList cert;  // certifications accumulated while computing
};

/// N_i = (E*_0 V + ... + E*_i V) ^ (E_0 V + ... + E_{D-i} V), for 0 <= i <= D.
std::vector<Subspace> nucleus_spaces(const BaseContext& ctx);

/// N = sum N_i with directness, T-invariance, the shift relations
/// (A - theta_{D-i})N_i <= N_{i+1} and (A* - theta*_i)N_i <= N_{i-1},
/// the empty intersections for i + j < D, the orthogonal slice sums, and the
/// T-invariance of the orthogonal complement all certified along the way.
NucleusData compute_nucleus(const BaseContext& ctx);

/// E*_i N by one of three routes. Projection works for every context;
/// the local-spectral (a_i eigenspace of the local adjacency) and
/// connected-component routes require a nonbipartite dual polar context.
Subspace estar_nucleus(const BaseContext& ctx, const NucleusData& nd, int i, EstarMethod method);

/// Connected components of the subgraph induced on the sphere of radius i,
/// as sorted vertex lists.
std::vector<std::vector<int>> sphere_components(const BaseContext& ctx, int i);

/// Greedy peeling by endpoint: split N into certified irreducible thin
/// modules, filling modules and mult. Aborts with diagnostics on a
/// certificate failure.
void decompose_nucleus(const BaseContext& ctx, NucleusData& nd);

/// The six-way dimension counts, the q-binomial formulas available for
/// nonbipartite dual polar graphs, and the component-count agreement.
CheckList verify_nucleus_theorems(const BaseContext& ctx, const NucleusData& nd);

}  // namespace nlab
