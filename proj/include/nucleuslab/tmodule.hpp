#pragma once

#include <optional>

#include "nucleuslab/spectral.hpp"

namespace nlab {

/// Profile of a T-invariant subspace W: slice data with respect to both
/// eigenspace families, endpoint/dual endpoint/diameter, shape, displacement.
struct TModuleData {
    Subspace basis{0};
    int endpoint = 0;       // r: first nonzero E*-slice
    int dual_endpoint = 0;  // t: first nonzero E-slice
    int diameter = 0;       // d: nonzero E-slice count - 1 (= dual diameter, asserted)
    int displacement = 0;   // r + t - D + d
    std::vector<int> shape;  // dims of E*_{r+i} W, 0 <= i <= d
    bool thin = false;
    bool irreducible_certified = false;
    std::vector<Subspace> estar_slices;  // E*_i W for 0 <= i <= D
    std::vector<Subspace> e_slices;      // E_i W
};

/// Smallest subspace containing v that is invariant under A and A*.
Subspace t_closure(const BaseContext& ctx, const std::vector<Rational>& v);

/// Profile a T-invariant subspace. Throws if W is not invariant (the message
/// names the offending operator), if a slice family has gaps, if the two
/// diameters disagree, or if the displacement is negative.
TModuleData module_profile(const BaseContext& ctx, const Subspace& w);

/// Thin-module irreducibility certificate: in a basis (w_i) with w_i spanning
/// E*_{r+i}W, the matrix of A is tridiagonal with nonzero sub/super diagonals
/// while A* is diagonal with distinct entries; no proper invariant subspace
/// can then exist. Returns false (with detail) when the certificate fails.
bool certify_thin_irreducible(const BaseContext& ctx, TModuleData& data, std::string* detail = nullptr);

struct TDSystemReport {
    CheckList checks;
    std::vector<int> split_dims;        // dim U_i
    std::vector<Rational> module_a;     // a_i(W)
    bool leonard = false;
};

/// Full tridiagonal-system verification for a certified thin module:
/// block tridiagonality, split decomposition U_i with dim U_i = rho_i,
/// raising-map chain and R^d bijectivity, the A_D/A*_D slice mappings for
/// displacement zero, the scalar actions a_i(W), and the closed-form
/// comparisons available for dual polar graphs.
TDSystemReport verify_td_system(const BaseContext& ctx, const TModuleData& data);

struct IsoReport {
    CheckList checks;
    bool isomorphic = false;
};

/// Explicit isomorphism between two irreducible nucleus submodules with the
/// same endpoint: sigma maps f_i(A)v to f_i(A)v' and must commute with A and
/// A* exactly. Throws when the endpoints differ.
IsoReport module_isomorphism(const BaseContext& ctx, const TModuleData& w1, const TModuleData& w2);

/// Coordinates of u in the row space of basis_rows, if u lies there.
std::optional<std::vector<Rational>> solve_in_basis(const std::vector<std::vector<Rational>>& basis_rows,
                                                    const std::vector<Rational>& u);

std::vector<Rational> diag_apply(const std::vector<Rational>& diag, const std::vector<Rational>& v);

}  // namespace nlab
