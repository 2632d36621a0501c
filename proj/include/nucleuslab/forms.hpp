#pragma once

#include <string>
#include <vector>

#include "nucleuslab/gf_subspace.hpp"

namespace nlab {

enum class FormKind {
    Symplectic,        // B = sum(x_{2i} y_{2i+1} - x_{2i+1} y_{2i}), dim 2D
    QuadraticOdd,      // Q = x_0^2 + sum x_{2i-1} x_{2i}, dim 2D+1   (B_D)
    QuadraticHyperbolic,  // Q = sum x_{2i} x_{2i+1}, dim 2D          (D_D)
    Hermitean,         // B = sum x_i conj(y_i), dim 2D+1 or 2D       (2A)
};

std::string form_kind_name(FormKind kind);

/// A nondegenerate form in the fixed standard coordinates for its kind.
/// Quadratic kinds carry both the quadratic coefficients and the associated
/// (polar) bilinear form B(u,v) = Q(u+v) - Q(u) - Q(v).
class FormSpec {
public:
    FormSpec(FieldPtr field, FormKind kind, int ambient_dim);

    const FieldPtr& field() const { return field_; }
    FormKind kind() const { return kind_; }
    int ambient_dim() const { return dim_; }
    bool has_quadratic() const {
        return kind_ == FormKind::QuadraticOdd || kind_ == FormKind::QuadraticHyperbolic;
    }
    bool is_hermitean() const { return kind_ == FormKind::Hermitean; }

    /// Gram matrix of the (sesqui)bilinear form.
    const std::vector<FFVector>& gram() const { return gram_; }

    unsigned bilinear(const FFVector& u, const FFVector& v) const;
    unsigned quadratic(const FFVector& u) const;

private:
    FieldPtr field_;
    FormKind kind_;
    int dim_;
    std::vector<FFVector> gram_;
    std::vector<FFVector> quad_;  // upper-triangular coefficients, quadratic kinds only
};

/// True iff the form (B, and Q for quadratic kinds) vanishes identically on s.
bool is_totally_isotropic(const FormSpec& form, const FFSubspace& s);

/// Vectors v with B(v, b) = 0 for every basis vector b of s.
FFSubspace perp(const FormSpec& form, const FFSubspace& s);

/// All maximal (dimension-D) totally isotropic subspaces, canonically ordered.
std::vector<FFSubspace> max_isotropic_enumerate(const FormSpec& form, int D);

/// Test oracle: filter all D-dimensional subspaces; exponential, tiny cases only.
std::vector<FFSubspace> max_isotropic_brute_force(const FormSpec& form, int D);

}  // namespace nlab
