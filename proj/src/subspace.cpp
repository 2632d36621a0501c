#include "nucleuslab/subspace.hpp"

#include <numeric>
#include <stdexcept>

namespace nlab {

RrefResult rref(const RatMatrix& m) {
    RrefResult out{m, {}, 0};
    RatMatrix& a = out.reduced;
    int lead = 0;
    for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
        // The reduced form is pivot-order independent, so pick the smallest
        // candidate (by limb count) to curb coefficient growth.
        int pivot = -1;
        std::size_t best = 0;
        for (int r = lead; r < a.rows(); ++r) {
            const Rational& e = a.at(r, col);
            if (e == 0) continue;
            std::size_t size = mpz_size(e.get_num().get_mpz_t()) +
                               mpz_size(e.get_den().get_mpz_t());
            if (pivot < 0 || size < best) {
                pivot = r;
                best = size;
                if (size <= 2) break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != lead)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(lead, j));
        Rational inv = 1 / a.at(lead, col);
        for (int j = col; j < a.cols(); ++j) a.at(lead, j) *= inv;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, col) == 0) continue;
            Rational f = a.at(r, col);
            for (int j = col; j < a.cols(); ++j) a.at(r, j) -= f * a.at(lead, j);
        }
        out.pivots.push_back(col);
        ++lead;
    }
    out.rank = static_cast<int>(out.pivots.size());
    return out;
}

Subspace Subspace::full(int ambient) { return row_space(RatMatrix::identity(ambient)); }

Subspace Subspace::row_space(const RatMatrix& m) {
    RrefResult rr = rref(m);
    Subspace s(m.cols());
    RatMatrix basis(rr.rank, m.cols());
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < m.cols(); ++j) basis.at(i, j) = rr.reduced.at(i, j);
    s.basis_ = std::move(basis);
    s.pivots_ = rr.pivots;
    return s;
}

Subspace Subspace::span(int ambient, const std::vector<std::vector<Rational>>& generators) {
    RatMatrix m(static_cast<int>(generators.size()), ambient);
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(generators[i].size()) != ambient)
            throw std::invalid_argument("generator has wrong ambient dimension");
        for (int j = 0; j < ambient; ++j) m.at(i, j) = generators[i][j];
    }
    return row_space(m);
}

Subspace Subspace::single(const std::vector<Rational>& v) {
    return span(static_cast<int>(v.size()), {v});
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("ambient mismatch");
    std::vector<Rational> w = v;
    for (int i = 0; i < basis_.rows(); ++i) {
        int p = pivots_[i];
        if (w[p] == 0) continue;
        Rational f = w[p];
        for (int j = p; j < ambient_; ++j)
            if (basis_.at(i, j) != 0) w[j] -= f * basis_.at(i, j);
    }
    for (const auto& e : w)
        if (e != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_vector(i))) return false;
    return true;
}

Subspace kernel(const RatMatrix& m) {
    RrefResult rr = rref(m);
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> gens;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[f] = 1;
        for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.reduced.at(i, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens);
}

Subspace sum(const Subspace& u, const Subspace& w) {
    if (u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
    RatMatrix stacked(u.dim() + w.dim(), u.ambient());
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < u.ambient(); ++j) stacked.at(i, j) = u.basis().at(i, j);
    for (int i = 0; i < w.dim(); ++i)
        for (int j = 0; j < w.ambient(); ++j) stacked.at(u.dim() + i, j) = w.basis().at(i, j);
    return Subspace::row_space(stacked);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
    int n = u.ambient();
    // Zassenhaus: row reduce [U | U; W | 0]; rows with zero left half carry the
    // intersection in their right half.
    RatMatrix z(u.dim() + w.dim(), 2 * n);
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < n; ++j) {
            z.at(i, j) = u.basis().at(i, j);
            z.at(i, n + j) = u.basis().at(i, j);
        }
    for (int i = 0; i < w.dim(); ++i)
        for (int j = 0; j < n; ++j) z.at(u.dim() + i, j) = w.basis().at(i, j);
    RrefResult rr = rref(z);
    std::vector<std::vector<Rational>> gens;
    for (int i = 0; i < rr.rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (rr.reduced.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<Rational> v(n);
        for (int j = 0; j < n; ++j) v[j] = rr.reduced.at(i, n + j);
        gens.push_back(std::move(v));
    }
    return Subspace::span(n, gens);
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
    return acc;
}

Subspace orth_complement(const Subspace& u, const Subspace& w) {
    if (u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
    if (!w.contains(u)) throw std::invalid_argument("orth_complement requires U within W");
    // Solve G c = 0 where G[j][i] = <w_i, u_j>; complement vectors are c . basis(W).
    RatMatrix g(u.dim(), w.dim());
    for (int j = 0; j < u.dim(); ++j) {
        std::vector<Rational> uj = u.basis_vector(j);
        for (int i = 0; i < w.dim(); ++i) g.at(j, i) = dot(w.basis_vector(i), uj);
    }
    Subspace coeffs = kernel(g);
    std::vector<std::vector<Rational>> gens;
    for (int r = 0; r < coeffs.dim(); ++r) {
        std::vector<Rational> c = coeffs.basis_vector(r);
        std::vector<Rational> v(w.ambient(), Rational(0));
        for (int i = 0; i < w.dim(); ++i) {
            if (c[i] == 0) continue;
            for (int j = 0; j < w.ambient(); ++j)
                if (w.basis().at(i, j) != 0) v[j] += c[i] * w.basis().at(i, j);
        }
        gens.push_back(std::move(v));
    }
    return Subspace::span(w.ambient(), gens);
}

bool is_direct(const std::vector<Subspace>& spaces) {
    if (spaces.empty()) return true;
    int ambient = spaces.front().ambient();
    int total = 0;
    Subspace acc = Subspace::zero(ambient);
    for (const auto& s : spaces) {
        if (s.ambient() != ambient) throw std::invalid_argument("ambient mismatch");
        total += s.dim();
        acc = sum(acc, s);
    }
    return acc.dim() == total;
}

Subspace eigenspace(const RatMatrix& m, const Rational& theta) {
    if (!m.is_square()) throw std::invalid_argument("eigenspace of non-square matrix");
    RatMatrix shifted = m;
    for (int i = 0; i < m.rows(); ++i) shifted.at(i, i) -= theta;
    return kernel(shifted);
}

Subspace image(const RatMatrix& m, const Subspace& s) {
    if (m.cols() != s.ambient()) throw std::invalid_argument("image dimension mismatch");
    std::vector<std::vector<Rational>> gens;
    for (int i = 0; i < s.dim(); ++i) gens.push_back(m.apply(s.basis_vector(i)));
    return Subspace::span(m.rows(), gens);
}

bool are_orthogonal(const Subspace& u, const Subspace& w) {
    for (int i = 0; i < u.dim(); ++i) {
        std::vector<Rational> ui = u.basis_vector(i);
        for (int j = 0; j < w.dim(); ++j)
            if (dot(ui, w.basis_vector(j)) != 0) return false;
    }
    return true;
}

}  // namespace nlab
