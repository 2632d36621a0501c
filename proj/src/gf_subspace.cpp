#include "nucleuslab/gf_subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlab {

namespace {

// In-place RREF over GF(q); returns pivot columns.
std::vector<int> ff_rref(const FieldSpec& F, std::vector<FFVector>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    int cols = static_cast<int>(rows[0].size());
    std::size_t lead = 0;
    for (int col = 0; col < cols && lead < rows.size(); ++col) {
        std::size_t pivot = lead;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[lead]);
        unsigned inv = F.inv(rows[lead][col]);
        for (int j = col; j < cols; ++j) rows[lead][j] = F.mul(rows[lead][j], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][col] == 0) continue;
            unsigned f = rows[r][col];
            for (int j = col; j < cols; ++j)
                rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[lead][j]));
        }
        pivots.push_back(col);
        ++lead;
    }
    rows.resize(pivots.size());
    return pivots;
}

}  // namespace

FFSubspace FFSubspace::span(FieldPtr field, int ambient, const std::vector<FFVector>& generators) {
    FFSubspace s(field, ambient);
    std::vector<FFVector> rows;
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != ambient)
            throw std::invalid_argument("generator has wrong ambient dimension");
        rows.push_back(g);
    }
    s.pivots_ = ff_rref(*field, rows);
    s.basis_ = std::move(rows);
    return s;
}

FFSubspace FFSubspace::full(FieldPtr field, int ambient) {
    std::vector<FFVector> gens;
    for (int i = 0; i < ambient; ++i) {
        FFVector e(ambient, 0);
        e[i] = 1;
        gens.push_back(e);
    }
    return span(std::move(field), ambient, gens);
}

bool FFSubspace::contains(const FFVector& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("ambient mismatch");
    FFVector w = v;
    const FieldSpec& F = *field_;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        int p = pivots_[i];
        if (w[p] == 0) continue;
        unsigned f = w[p];
        for (int j = p; j < ambient_; ++j) w[j] = F.sub(w[j], F.mul(f, basis_[i][j]));
    }
    return std::all_of(w.begin(), w.end(), [](unsigned c) { return c == 0; });
}

bool FFSubspace::contains(const FFSubspace& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

std::vector<FFVector> FFSubspace::all_vectors() const {
    const FieldSpec& F = *field_;
    std::vector<FFVector> out;
    unsigned long count = 1;
    for (int i = 0; i < dim(); ++i) count *= F.q();
    out.reserve(count);
    for (unsigned long idx = 0; idx < count; ++idx) {
        FFVector v(ambient_, 0);
        unsigned long rest = idx;
        for (int i = 0; i < dim(); ++i) {
            unsigned c = static_cast<unsigned>(rest % F.q());
            rest /= F.q();
            if (c == 0) continue;
            for (int j = 0; j < ambient_; ++j) v[j] = F.add(v[j], F.mul(c, basis_[i][j]));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<unsigned> FFSubspace::encode() const {
    std::vector<unsigned> key;
    key.reserve(basis_.size() * ambient_);
    for (const auto& row : basis_) key.insert(key.end(), row.begin(), row.end());
    return key;
}

bool FFSubspace::operator<(const FFSubspace& other) const {
    if (dim() != other.dim()) return dim() < other.dim();
    return encode() < other.encode();
}

FFSubspace ff_sum(const FFSubspace& u, const FFSubspace& w) {
    if (u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
    std::vector<FFVector> gens = u.basis();
    gens.insert(gens.end(), w.basis().begin(), w.basis().end());
    return FFSubspace::span(u.field(), u.ambient(), gens);
}

FFSubspace ff_intersect(const FFSubspace& u, const FFSubspace& w) {
    if (u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
    const FieldSpec& F = *u.field();
    int n = u.ambient();
    // Zassenhaus over GF(q), mirroring the rational version.
    std::vector<FFVector> rows;
    for (const auto& b : u.basis()) {
        FFVector row(2 * n, 0);
        std::copy(b.begin(), b.end(), row.begin());
        std::copy(b.begin(), b.end(), row.begin() + n);
        rows.push_back(std::move(row));
    }
    for (const auto& b : w.basis()) {
        FFVector row(2 * n, 0);
        std::copy(b.begin(), b.end(), row.begin());
        rows.push_back(std::move(row));
    }
    ff_rref(F, rows);
    std::vector<FFVector> gens;
    for (const auto& row : rows) {
        bool left_zero =
            std::all_of(row.begin(), row.begin() + n, [](unsigned c) { return c == 0; });
        if (left_zero) gens.emplace_back(row.begin() + n, row.end());
    }
    return FFSubspace::span(u.field(), n, gens);
}

std::vector<FFSubspace> enumerate_subspaces(const FFSubspace& ambient, int k) {
    int m = ambient.dim();
    if (k < 0 || k > m) throw std::invalid_argument("subspace dimension out of range");
    const FieldSpec& F = *ambient.field();
    std::vector<FFSubspace> out;

    // Enumerate RREF shapes in local coordinates: choose pivot columns, then
    // run through the free entries.
    std::vector<int> pivot_cols(k);
    for (int i = 0; i < k; ++i) pivot_cols[i] = i;
    auto emit = [&](const std::vector<std::vector<unsigned>>& local) {
        std::vector<FFVector> gens;
        for (const auto& lrow : local) {
            FFVector v(ambient.ambient(), 0);
            for (int j = 0; j < m; ++j) {
                if (lrow[j] == 0) continue;
                for (int c = 0; c < ambient.ambient(); ++c)
                    v[c] = F.add(v[c], F.mul(lrow[j], ambient.basis()[j][c]));
            }
            gens.push_back(std::move(v));
        }
        out.push_back(FFSubspace::span(ambient.field(), ambient.ambient(), gens));
    };

    if (k == 0) {
        out.push_back(FFSubspace::span(ambient.field(), ambient.ambient(), {}));
        return out;
    }

    while (true) {
        // Free positions: entries right of each pivot that are not pivots.
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(m, false);
        for (int c : pivot_cols) is_pivot[c] = true;
        for (int r = 0; r < k; ++r)
            for (int c = pivot_cols[r] + 1; c < m; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(r, c);

        unsigned long combos = 1;
        for (std::size_t i = 0; i < free_pos.size(); ++i) combos *= F.q();
        for (unsigned long idx = 0; idx < combos; ++idx) {
            std::vector<std::vector<unsigned>> local(k, std::vector<unsigned>(m, 0));
            for (int r = 0; r < k; ++r) local[r][pivot_cols[r]] = 1;
            unsigned long rest = idx;
            for (const auto& [r, c] : free_pos) {
                local[r][c] = static_cast<unsigned>(rest % F.q());
                rest /= F.q();
            }
            emit(local);
        }

        // Next pivot combination in lexicographic order.
        int i = k - 1;
        while (i >= 0 && pivot_cols[i] == m - k + i) --i;
        if (i < 0) break;
        ++pivot_cols[i];
        for (int j = i + 1; j < k; ++j) pivot_cols[j] = pivot_cols[j - 1] + 1;
    }

    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nlab
