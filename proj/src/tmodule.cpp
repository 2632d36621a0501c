#include "nucleuslab/tmodule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nlab {

std::vector<Rational> diag_apply(const std::vector<Rational>& diag, const std::vector<Rational>& v) {
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = diag[i] * v[i];
    return out;
}

std::optional<std::vector<Rational>> solve_in_basis(const std::vector<std::vector<Rational>>& basis_rows,
                                                    const std::vector<Rational>& u) {
    int k = static_cast<int>(basis_rows.size());
    int n = static_cast<int>(u.size());
    // Solve c . B = u via the transposed augmented system [B^t | u].
    RatMatrix aug(n, k + 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) aug.at(j, i) = basis_rows[i][j];
    for (int j = 0; j < n; ++j) aug.at(j, k) = u[j];
    RrefResult rr = rref(aug);
    std::vector<Rational> c(k, Rational(0));
    for (int i = 0; i < rr.rank; ++i) {
        if (rr.pivots[i] == k) return std::nullopt;  // inconsistent
        c[rr.pivots[i]] = rr.reduced.at(i, k);
    }
    return c;
}

namespace {

bool is_zero_vector(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

// u must equal c * w for a scalar c; returns c or nullopt.
std::optional<Rational> scalar_multiple(const std::vector<Rational>& u,
                                        const std::vector<Rational>& w) {
    Rational c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) {
            c = u[i] / w[i];
            break;
        }
    for (std::size_t i = 0; i < w.size(); ++i)
        if (u[i] != c * w[i]) return std::nullopt;
    return c;
}

std::vector<Rational> shifted_apply(const RatMatrix& A, const Rational& theta,
                                    const std::vector<Rational>& v) {
    std::vector<Rational> out = A.apply(v);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] -= theta * v[i];
    return out;
}

}  // namespace

Subspace t_closure(const BaseContext& ctx, const std::vector<Rational>& v) {
    if (static_cast<int>(v.size()) != ctx.n()) throw std::invalid_argument("ambient mismatch");
    if (is_zero_vector(v)) throw std::invalid_argument("closure of the zero vector");
    Subspace s = Subspace::single(v);
    std::vector<std::vector<Rational>> frontier{v};
    int rounds = 0;
    while (!frontier.empty()) {
        if (++rounds > ctx.n() + 1) throw std::logic_error("closure failed to stabilize");
        std::vector<std::vector<Rational>> next;
        for (const auto& b : frontier) {
            for (auto&& w : {ctx.A.apply(b), diag_apply(ctx.astar_diag[1], b)}) {
                if (!s.contains(w)) {
                    s = sum(s, Subspace::single(w));
                    next.push_back(std::move(w));
                }
            }
        }
        frontier = std::move(next);
    }
    return s;
}

TModuleData module_profile(const BaseContext& ctx, const Subspace& w) {
    int D = ctx.D();
    for (int i = 0; i < w.dim(); ++i) {
        std::vector<Rational> b = w.basis_vector(i);
        if (!w.contains(ctx.A.apply(b)))
            throw std::invalid_argument("subspace is not invariant under A");
        if (!w.contains(diag_apply(ctx.astar_diag[1], b)))
            throw std::invalid_argument("subspace is not invariant under A*");
    }

    TModuleData data;
    data.basis = w;
    data.estar_slices.reserve(D + 1);
    data.e_slices.reserve(D + 1);
    for (int i = 0; i <= D; ++i) {
        data.estar_slices.push_back(ctx.estar_image(i, w));
        data.e_slices.push_back(image(ctx.E(i), w));
    }

    auto slice_window = [D](const std::vector<Subspace>& slices, const char* what) {
        int first = -1, last = -1;
        for (int i = 0; i <= D; ++i)
            if (!slices[i].is_zero()) {
                if (first < 0) first = i;
                last = i;
            }
        if (first < 0) throw std::invalid_argument("zero subspace has no profile");
        for (int i = first; i <= last; ++i)
            if (slices[i].is_zero())
                throw std::domain_error(std::string(what) + "-slices have a gap at " +
                                        std::to_string(i));
        return std::pair{first, last};
    };
    auto [r, r_last] = slice_window(data.estar_slices, "E*");
    auto [t, t_last] = slice_window(data.e_slices, "E");
    data.endpoint = r;
    data.dual_endpoint = t;
    int delta = r_last - r;
    int d = t_last - t;
    if (d != delta)
        throw std::domain_error("diameter " + std::to_string(d) + " != dual diameter " +
                                std::to_string(delta));
    data.diameter = d;
    data.displacement = r + t - D + d;
    if (data.displacement < 0) throw std::domain_error("negative displacement");

    data.shape.resize(d + 1);
    data.thin = true;
    for (int i = 0; i <= d; ++i) {
        data.shape[i] = data.estar_slices[r + i].dim();
        if (data.shape[i] != 1) data.thin = false;
        if (data.e_slices[t + i].dim() != 1) data.thin = false;
    }
    return data;
}

bool certify_thin_irreducible(const BaseContext& ctx, TModuleData& data, std::string* detail) {
    auto report = [&](const std::string& msg) {
        if (detail) *detail = msg;
        return false;
    };
    if (!data.thin) return report("module is not thin");
    int r = data.endpoint, d = data.diameter;
    std::vector<std::vector<Rational>> w(d + 1);
    for (int i = 0; i <= d; ++i) w[i] = data.estar_slices[r + i].basis_vector(0);
    for (int i = 0; i <= d; ++i) {
        std::vector<Rational> u = ctx.A.apply(w[i]);
        for (int j = 0; j <= ctx.D() - r; ++j) {
            std::vector<Rational> uj = ctx.estar_apply(r + j, u);
            if (j > d) {
                if (!is_zero_vector(uj)) return report("A leaves the slice window");
                continue;
            }
            auto c = scalar_multiple(uj, w[j]);
            if (!c) return report("slice image is not a scalar multiple");
            if (std::abs(i - j) > 1 && *c != 0)
                return report("A is not tridiagonal on the slices");
            if (std::abs(i - j) == 1 && *c == 0)
                return report("A has a zero sub/super-diagonal entry at (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
        }
        // Coordinates below the window.
        for (int j = 0; j < r; ++j)
            if (!is_zero_vector(ctx.estar_apply(j, u)))
                return report("A leaves the slice window");
    }
    // A* is diagonal on the w_i with the mutually distinct values theta*_{r+i};
    // distinctness was certified with the base context.
    data.irreducible_certified = true;
    return true;
}

TDSystemReport verify_td_system(const BaseContext& ctx, const TModuleData& data) {
    if (!data.irreducible_certified || !data.thin)
        throw std::invalid_argument("td-system verification needs a certified thin module");
    TDSystemReport report;
    CheckList& checks = report.checks;
    int D = ctx.D();
    int r = data.endpoint, t = data.dual_endpoint, d = data.diameter;
    const std::vector<Rational>& theta = ctx.spec.theta;
    const std::vector<Rational>& theta_star = ctx.theta_star;

    checks.require(2 * r - D + d >= 0, "Wineq", "2r - D + d < 0");
    checks.require(2 * t - D + d >= 0, "Wineq2", "2t - D + d < 0");

    // Shape symmetry and unimodality.
    {
        bool ok = true;
        for (int i = 0; i <= d; ++i) {
            if (data.shape[i] != data.shape[d - i]) ok = false;
            if (data.shape[i] != data.e_slices[t + i].dim()) ok = false;
        }
        for (int i = 1; 2 * i <= d; ++i)
            if (data.shape[i - 1] > data.shape[i]) ok = false;
        checks.require(ok, "shape", "shape symmetry/monotonicity failure");
    }

    // Block tridiagonality in the standard orderings (E_{t+i}), (E*_{r+i}).
    {
        bool ok = true;
        for (int i = 0; i <= d && ok; ++i) {
            Subspace window = Subspace::zero(ctx.n());
            for (int j = std::max(0, i - 1); j <= std::min(d, i + 1); ++j)
                window = sum(window, data.e_slices[t + j]);
            for (int b = 0; b < data.e_slices[t + i].dim(); ++b) {
                std::vector<Rational> u =
                    diag_apply(ctx.astar_diag[1], data.e_slices[t + i].basis_vector(b));
                if (!window.contains(u)) ok = false;
            }
        }
        checks.require(ok, "TDP.AstarTridiagonal", "A* E_{t+i}W escapes the adjacent slices");
        ok = true;
        for (int i = 0; i <= d && ok; ++i) {
            Subspace window = Subspace::zero(ctx.n());
            for (int j = std::max(0, i - 1); j <= std::min(d, i + 1); ++j)
                window = sum(window, data.estar_slices[r + j]);
            for (int b = 0; b < data.estar_slices[r + i].dim(); ++b) {
                std::vector<Rational> u = ctx.A.apply(data.estar_slices[r + i].basis_vector(b));
                if (!window.contains(u)) ok = false;
            }
        }
        checks.require(ok, "TDP.ATridiagonal", "A E*_{r+i}W escapes the adjacent slices");
    }

    // Split decomposition U_i = (E*_rW + ... + E*_{r+i}W) ^ (E_tW + ... + E_{t+d-i}W).
    std::vector<Subspace> U;
    {
        std::vector<Subspace> estar_prefix(d + 1, Subspace::zero(ctx.n()));
        std::vector<Subspace> e_prefix(d + 1, Subspace::zero(ctx.n()));
        Subspace acc = Subspace::zero(ctx.n());
        for (int i = 0; i <= d; ++i) {
            acc = sum(acc, data.estar_slices[r + i]);
            estar_prefix[i] = acc;
        }
        acc = Subspace::zero(ctx.n());
        for (int i = 0; i <= d; ++i) {
            acc = sum(acc, data.e_slices[t + i]);
            e_prefix[i] = acc;
        }
        bool dims_ok = true;
        for (int i = 0; i <= d; ++i) {
            U.push_back(intersect(estar_prefix[i], e_prefix[d - i]));
            report.split_dims.push_back(U.back().dim());
            if (U.back().dim() != data.shape[i]) dims_ok = false;
        }
        checks.require(dims_ok, "WSP.dims", "dim U_i != rho_i");
        checks.require(is_direct(U), "WSP.direct", "sum of U_i is not direct");
        bool span_ok = true;
        Subspace total = Subspace::zero(ctx.n());
        for (const auto& u : U) total = sum(total, u);
        if (!(total == data.basis)) span_ok = false;
        checks.require(span_ok, "WSP.span", "sum of U_i != W");
    }

    // Raising and lowering relations on the split decomposition.
    {
        bool raise_ok = true, lower_ok = true;
        for (int i = 0; i <= d; ++i) {
            for (int b = 0; b < U[i].dim(); ++b) {
                std::vector<Rational> u =
                    shifted_apply(ctx.A, theta[t + d - i], U[i].basis_vector(b));
                if (i < d) {
                    if (!U[i + 1].contains(u)) raise_ok = false;
                } else if (!is_zero_vector(u)) {
                    raise_ok = false;
                }
                std::vector<Rational> v = diag_apply(ctx.astar_diag[1], U[i].basis_vector(b));
                for (std::size_t s = 0; s < v.size(); ++s)
                    v[s] -= theta_star[r + i] * U[i].basis_vector(b)[s];
                if (i > 0) {
                    if (!U[i - 1].contains(v)) lower_ok = false;
                } else if (!is_zero_vector(v)) {
                    lower_ok = false;
                }
            }
        }
        checks.require(raise_ok, "main1.raise", "(A - theta_{t+d-i})U_i not in U_{i+1}");
        checks.require(lower_ok, "main1.lower", "(A* - theta*_{r+i})U_i not in U_{i-1}");
    }

    // R^d : U_0 -> U_d bijective, and the f_i(A)v ladder is independent (inj).
    {
        std::vector<Rational> v = data.estar_slices[r].basis_vector(0);
        std::vector<std::vector<Rational>> ladder{v};
        bool ladder_ok = U[0].contains(v);
        std::vector<Rational> cur = v;
        for (int i = 0; i < d; ++i) {
            cur = shifted_apply(ctx.A, theta[t + d - i], cur);
            if (is_zero_vector(cur)) {
                ladder_ok = false;
                break;
            }
            ladder.push_back(cur);
        }
        checks.require(ladder_ok && static_cast<int>(ladder.size()) == d + 1, "main1.Rd",
                       "R^d chain collapsed before U_d");
        if (ladder_ok && static_cast<int>(ladder.size()) == d + 1) {
            checks.require(U[d].contains(ladder[d]) && !is_zero_vector(ladder[d]), "main1.RdOnto",
                           "R^d v does not span U_d");
            Subspace span = Subspace::span(ctx.n(), ladder);
            checks.require(span.dim() == d + 1, "inj", "f_i(A)v are linearly dependent");
        }
    }

    report.leonard = std::all_of(data.shape.begin(), data.shape.end(),
                                 [](int s) { return s == 1; });
    checks.require(report.leonard == data.thin, "Leonard", "Leonard flag disagrees with thinness");

    // Displacement-zero slice mappings (Wdata).
    if (data.displacement == 0) {
        Subspace mapped = image(ctx.dist.A[D], data.estar_slices[r]);
        checks.require(mapped == data.estar_slices[D - r], "Wdata.AD",
                       "A_D E*_rW != E*_{D-r}W");
        std::vector<std::vector<Rational>> gens;
        for (int b = 0; b < data.e_slices[r].dim(); ++b)
            gens.push_back(diag_apply(ctx.astar_diag[D], data.e_slices[r].basis_vector(b)));
        Subspace mapped2 = Subspace::span(ctx.n(), gens);
        checks.require(mapped2 == data.e_slices[D - r], "Wdata.AstarD",
                       "A*_D E_rW != E_{D-r}W");
    } else {
        checks.skip("Wdata.AD", "displacement nonzero");
        checks.skip("Wdata.AstarD", "displacement nonzero");
    }

    // Scalar actions a_i(W) on the E*-slices (aiWM).
    {
        bool ok = true;
        for (int i = 0; i <= d; ++i) {
            std::vector<Rational> w = data.estar_slices[r + i].basis_vector(0);
            std::vector<Rational> u = ctx.estar_apply(r + i, ctx.A.apply(w));
            auto c = scalar_multiple(u, w);
            if (!c) {
                ok = false;
                report.module_a.emplace_back(0);
            } else {
                report.module_a.push_back(*c);
            }
        }
        checks.require(ok, "aiWM", "E*_{r+i} A E*_{r+i} is not scalar on the slice");
        if (ok && data.displacement == 0) {
            bool eq = true;
            for (int i = 0; i <= d; ++i)
                if (report.module_a[i] != Rational(ctx.dr.a[r + i])) eq = false;
            checks.require(eq, "4Views", "a_i(W) != a_{r+i}");
        } else if (ok) {
            checks.skip("4Views", "displacement nonzero");
        }
        if (ok && ctx.graph->is_dual_polar()) {
            const DualPolarInfo& dp = *ctx.graph->dual_polar;
            bool eq = true;
            for (int i = 0; i <= d; ++i) {
                Rational want = (Rational(dp.a1 + 1) * Rational(int_pow(dp.q, D - d - t + i)) -
                                 Rational(int_pow(dp.q, t + i)) - Rational(dp.a1)) /
                                Rational(dp.q - 1);
                if (report.module_a[i] != want) eq = false;
            }
            checks.require(eq, "TW", "a_i(W) != closed form");
        } else if (ok) {
            checks.skip("TW", "closed form applies to dual polar graphs only");
        }
    }
    return report;
}

IsoReport module_isomorphism(const BaseContext& ctx, const TModuleData& w1, const TModuleData& w2) {
    if (w1.endpoint != w2.endpoint)
        throw std::invalid_argument("modules have different endpoints");
    if (!w1.irreducible_certified || !w2.irreducible_certified)
        throw std::invalid_argument("isomorphism needs certified irreducible modules");
    if (w1.diameter != w2.diameter) throw std::invalid_argument("modules have different diameters");

    IsoReport out;
    int r = w1.endpoint, d = w1.diameter;
    const std::vector<Rational>& theta = ctx.spec.theta;

    // Ladders f_i(A)v with f_i(lambda) = (lambda - theta_{r+d}) ... (lambda - theta_{r+d-i+1}).
    auto ladder_for = [&](const TModuleData& w) {
        std::vector<std::vector<Rational>> ladder{w.estar_slices[r].basis_vector(0)};
        for (int i = 0; i < d; ++i)
            ladder.push_back(shifted_apply(ctx.A, theta[r + d - i], ladder.back()));
        return ladder;
    };
    std::vector<std::vector<Rational>> b1 = ladder_for(w1), b2 = ladder_for(w2);

    bool basis_ok = Subspace::span(ctx.n(), b1).dim() == d + 1 &&
                    Subspace::span(ctx.n(), b2).dim() == d + 1;
    out.checks.require(basis_ok, "nucISO.basis", "f_i(A)v ladder is not a basis");
    if (!basis_ok) return out;

    // sigma: f_i(A)v -> f_i(A)v' commutes with an operator iff the operator's
    // coordinate matrices in the two ladder bases coincide.
    auto op_matrix = [&](const std::vector<std::vector<Rational>>& basis, bool dual) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& b : basis) {
            std::vector<Rational> u = dual ? diag_apply(ctx.astar_diag[1], b) : ctx.A.apply(b);
            auto c = solve_in_basis(basis, u);
            if (!c) return std::optional<std::vector<std::vector<Rational>>>{};
            rows.push_back(*c);
        }
        return std::optional{rows};
    };
    auto a1m = op_matrix(b1, false), a2m = op_matrix(b2, false);
    auto s1m = op_matrix(b1, true), s2m = op_matrix(b2, true);
    bool closed = a1m && a2m && s1m && s2m;
    out.checks.require(closed, "nucISO.closed", "operator image leaves the ladder span");
    if (!closed) return out;
    out.checks.require(*a1m == *a2m, "nucISO.commuteA", "sigma A != A sigma");
    out.checks.require(*s1m == *s2m, "nucISO.commuteAstar", "sigma A* != A* sigma");
    out.isomorphic = out.checks.all_passed();
    return out;
}

}  // namespace nlab
