#include "nucleuslab/forms.hpp"

#include <set>
#include <stdexcept>

namespace nlab {

std::string form_kind_name(FormKind kind) {
    switch (kind) {
        case FormKind::Symplectic: return "symplectic";
        case FormKind::QuadraticOdd: return "quadratic";
        case FormKind::QuadraticHyperbolic: return "quadratic-hyperbolic";
        case FormKind::Hermitean: return "hermitean";
    }
    return "?";
}

FormSpec::FormSpec(FieldPtr field, FormKind kind, int ambient_dim)
    : field_(std::move(field)), kind_(kind), dim_(ambient_dim) {
    const FieldSpec& F = *field_;
    gram_.assign(dim_, FFVector(dim_, 0));
    switch (kind_) {
        case FormKind::Symplectic:
            if (dim_ % 2 != 0) throw std::invalid_argument("symplectic form needs even dimension");
            for (int i = 0; i + 1 < dim_; i += 2) {
                gram_[i][i + 1] = 1;
                gram_[i + 1][i] = F.neg(1);
            }
            break;
        case FormKind::QuadraticOdd: {
            if (dim_ % 2 != 1) throw std::invalid_argument("odd quadratic form needs odd dimension");
            quad_.assign(dim_, FFVector(dim_, 0));
            quad_[0][0] = 1;
            for (int i = 1; i + 1 < dim_; i += 2) quad_[i][i + 1] = 1;
            break;
        }
        case FormKind::QuadraticHyperbolic: {
            if (dim_ % 2 != 0) throw std::invalid_argument("hyperbolic form needs even dimension");
            quad_.assign(dim_, FFVector(dim_, 0));
            for (int i = 0; i + 1 < dim_; i += 2) quad_[i][i + 1] = 1;
            break;
        }
        case FormKind::Hermitean:
            if (!F.has_conj())
                throw std::invalid_argument("hermitean form needs an even extension degree");
            for (int i = 0; i < dim_; ++i) gram_[i][i] = 1;
            break;
    }
    if (has_quadratic()) {
        // Polar form B(u,v) = Q(u+v) - Q(u) - Q(v), from the coefficients:
        // B(e_i, e_j) = quad[i][j] + quad[j][i] for i != j, B(e_i, e_i) = 2 quad[i][i].
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                if (i == j)
                    gram_[i][i] = F.mul(F.add(1, 1), quad_[i][i]);
                else
                    gram_[i][j] = F.add(quad_[i][j], quad_[j][i]);
            }
    }
}

unsigned FormSpec::bilinear(const FFVector& u, const FFVector& v) const {
    if (static_cast<int>(u.size()) != dim_ || static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("form dimension mismatch");
    const FieldSpec& F = *field_;
    unsigned acc = 0;
    for (int i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (gram_[i][j] == 0 || v[j] == 0) continue;
            unsigned vj = is_hermitean() ? F.conj(v[j]) : v[j];
            acc = F.add(acc, F.mul(u[i], F.mul(gram_[i][j], vj)));
        }
    }
    return acc;
}

unsigned FormSpec::quadratic(const FFVector& u) const {
    if (!has_quadratic()) throw std::domain_error("form has no quadratic part");
    if (static_cast<int>(u.size()) != dim_) throw std::invalid_argument("form dimension mismatch");
    const FieldSpec& F = *field_;
    unsigned acc = 0;
    for (int i = 0; i < dim_; ++i) {
        if (u[i] == 0) continue;
        for (int j = i; j < dim_; ++j)
            if (quad_[i][j] != 0 && u[j] != 0) acc = F.add(acc, F.mul(quad_[i][j], F.mul(u[i], u[j])));
    }
    return acc;
}

bool is_totally_isotropic(const FormSpec& form, const FFSubspace& s) {
    if (s.ambient() != form.ambient_dim()) throw std::invalid_argument("ambient mismatch");
    const auto& basis = s.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (form.bilinear(basis[i], basis[j]) != 0) return false;
    if (form.has_quadratic()) {
        // In characteristic 2 the quadratic values are not pinned down by B on a
        // basis, so evaluate Q across a closed spanning set for small dimensions
        // and on the basis otherwise (with B above, that already forces Q = 0).
        if (s.dim() <= 3) {
            for (const auto& v : s.all_vectors())
                if (form.quadratic(v) != 0) return false;
        } else {
            for (const auto& b : basis)
                if (form.quadratic(b) != 0) return false;
        }
    }
    return true;
}

FFSubspace perp(const FormSpec& form, const FFSubspace& s) {
    const FieldSpec& F = *s.field();
    int n = form.ambient_dim();
    // Solve B(v, b) = 0 for all basis b: rows of the constraint matrix are
    // (Gram . conj-twisted b); kernel via RREF with tracked transformations.
    std::vector<FFVector> constraint;
    for (const auto& b : s.basis()) {
        FFVector row(n, 0);
        for (int i = 0; i < n; ++i) {
            unsigned acc = 0;
            for (int j = 0; j < n; ++j) {
                if (form.gram()[i][j] == 0 || b[j] == 0) continue;
                unsigned bj = form.is_hermitean() ? F.conj(b[j]) : b[j];
                acc = F.add(acc, F.mul(form.gram()[i][j], bj));
            }
            row[i] = acc;
        }
        constraint.push_back(std::move(row));
    }
    // Kernel of the constraint matrix over GF(q).
    FFSubspace cspace = FFSubspace::span(s.field(), n, constraint);
    std::vector<bool> is_pivot(n, false);
    for (int p : cspace.pivots()) is_pivot[p] = true;
    std::vector<FFVector> gens;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        FFVector v(n, 0);
        v[f] = 1;
        for (int i = 0; i < cspace.dim(); ++i)
            v[cspace.pivots()[i]] = F.neg(cspace.basis()[i][f]);
        gens.push_back(std::move(v));
    }
    return FFSubspace::span(s.field(), n, gens);
}

namespace {

bool point_isotropic(const FormSpec& form, const FFVector& v) {
    if (form.has_quadratic()) return form.quadratic(v) == 0;
    return form.bilinear(v, v) == 0;
}

// Canonical projective points: first nonzero coordinate scaled to 1.
std::vector<FFVector> isotropic_points(const FormSpec& form) {
    const FieldSpec& F = *form.field();
    int n = form.ambient_dim();
    std::vector<FFVector> points;
    FFVector v(n, 0);
    // Iterate over canonical representatives: leading coordinate 1 at position lead,
    // free coordinates to the right.
    for (int lead = 0; lead < n; ++lead) {
        int free = n - lead - 1;
        unsigned long combos = 1;
        for (int i = 0; i < free; ++i) combos *= F.q();
        for (unsigned long idx = 0; idx < combos; ++idx) {
            std::fill(v.begin(), v.end(), 0u);
            v[lead] = 1;
            unsigned long rest = idx;
            for (int i = lead + 1; i < n; ++i) {
                v[i] = static_cast<unsigned>(rest % F.q());
                rest /= F.q();
            }
            if (point_isotropic(form, v)) points.push_back(v);
        }
    }
    return points;
}

void extend(const FormSpec& form, const std::vector<FFVector>& points, const FFSubspace& current,
            int D, std::set<std::vector<unsigned>>& visited, std::vector<FFSubspace>& found) {
    if (current.dim() == D) {
        found.push_back(current);
        return;
    }
    FFSubspace p = perp(form, current);
    for (const auto& pt : points) {
        if (!p.contains(pt) || current.contains(pt)) continue;
        std::vector<FFVector> gens = current.basis();
        gens.push_back(pt);
        FFSubspace next = FFSubspace::span(current.field(), current.ambient(), gens);
        if (!visited.insert(next.encode()).second) continue;
        if (!is_totally_isotropic(form, next)) continue;
        extend(form, points, next, D, visited, found);
    }
}

}  // namespace

std::vector<FFSubspace> max_isotropic_enumerate(const FormSpec& form, int D) {
    std::vector<FFVector> points = isotropic_points(form);
    std::set<std::vector<unsigned>> visited;
    std::vector<FFSubspace> found;
    FFSubspace zero = FFSubspace::span(form.field(), form.ambient_dim(), {});
    extend(form, points, zero, D, visited, found);
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<FFSubspace> max_isotropic_brute_force(const FormSpec& form, int D) {
    FFSubspace full = FFSubspace::full(form.field(), form.ambient_dim());
    std::vector<FFSubspace> out;
    for (const auto& s : enumerate_subspaces(full, D))
        if (is_totally_isotropic(form, s)) out.push_back(s);
    return out;
}

}  // namespace nlab
