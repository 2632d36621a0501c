#pragma once

#include <vector>

#include "nucleuslab/rat_matrix.hpp"

namespace nlab {

struct RrefResult {
    RatMatrix reduced;
    std::vector<int> pivots;
    int rank = 0;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const RatMatrix& m);

/// Subspace of Q^n held as its canonical RREF basis, one vector per row.
/// Two subspaces are equal iff their canonical bases coincide entrywise.
class Subspace {
public:
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace zero(int ambient) { return Subspace(ambient); }
    static Subspace full(int ambient);
    static Subspace span(int ambient, const std::vector<std::vector<Rational>>& generators);
    /// Span of the rows of m.
    static Subspace row_space(const RatMatrix& m);
    static Subspace single(const std::vector<Rational>& v);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }

    /// Canonical basis, dim() x ambient() in RREF with no zero rows.
    const RatMatrix& basis() const { return basis_; }
    std::vector<Rational> basis_vector(int i) const { return basis_.row(i); }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;

    bool operator==(const Subspace& other) const = default;

private:
    int ambient_;
    RatMatrix basis_;
    std::vector<int> pivots_;

    friend Subspace sum(const Subspace&, const Subspace&);
    friend Subspace intersect(const Subspace&, const Subspace&);
};

Subspace kernel(const RatMatrix& m);
Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

/// Orthogonal complement of u inside w for the standard dot product.
/// Requires u to be contained in w.
Subspace orth_complement(const Subspace& u, const Subspace& w);

/// True iff the sum of the given subspaces is direct.
bool is_direct(const std::vector<Subspace>& spaces);

Subspace eigenspace(const RatMatrix& m, const Rational& theta);

/// Image of s under the linear map m (span of m*b over basis vectors b of s).
Subspace image(const RatMatrix& m, const Subspace& s);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);
bool are_orthogonal(const Subspace& u, const Subspace& w);

}  // namespace nlab
