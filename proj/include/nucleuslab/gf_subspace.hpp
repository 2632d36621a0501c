#pragma once

#include <compare>
#include <vector>

#include "nucleuslab/gf.hpp"

namespace nlab {

using FFVector = std::vector<unsigned>;

/// Subspace of GF(q)^m held as its canonical RREF basis over the field.
/// Equality and ordering go through the canonical basis, so permuting the
/// generators never changes the object.
class FFSubspace {
public:
    FFSubspace(FieldPtr field, int ambient) : field_(std::move(field)), ambient_(ambient) {}

    static FFSubspace span(FieldPtr field, int ambient, const std::vector<FFVector>& generators);
    static FFSubspace full(FieldPtr field, int ambient);

    const FieldPtr& field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    bool is_zero() const { return basis_.empty(); }

    const std::vector<FFVector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const FFVector& v) const;
    bool contains(const FFSubspace& other) const;

    /// All vectors of the subspace (q^dim of them, the zero vector first).
    std::vector<FFVector> all_vectors() const;

    /// Flattened canonical encoding; usable as a dictionary key.
    std::vector<unsigned> encode() const;

    bool operator==(const FFSubspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }
    /// Canonical order: by dimension, then lexicographic on the basis rows.
    bool operator<(const FFSubspace& other) const;

private:
    FieldPtr field_;
    int ambient_;
    std::vector<FFVector> basis_;
    std::vector<int> pivots_;
};

FFSubspace ff_intersect(const FFSubspace& u, const FFSubspace& w);
FFSubspace ff_sum(const FFSubspace& u, const FFSubspace& w);

/// All k-dimensional subspaces of the given space, canonically ordered.
/// The count is the Gaussian binomial [dim choose k]_q.
std::vector<FFSubspace> enumerate_subspaces(const FFSubspace& ambient, int k);

}  // namespace nlab
