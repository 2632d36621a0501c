#include "nucleuslab/spectral.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nlab {

namespace {

std::string rat_str(const Rational& r) { return rational_to_string(r); }

}  // namespace

std::vector<Rational> eigenvalue_candidates(const DRCheck& dr) {
    int D = static_cast<int>(dr.c.size()) - 1;
    RatMatrix T(D + 1, D + 1);
    for (int i = 0; i <= D; ++i) {
        T.at(i, i) = Rational(dr.a[i]);
        if (i > 0) T.at(i, i - 1) = Rational(dr.b[i - 1]);
        if (i < D) T.at(i, i + 1) = Rational(dr.c[i + 1]);
    }
    long k = dr.k.size() > 1 ? dr.k[1] : 0;
    std::vector<Rational> out;
    for (long t = k; t >= -k; --t) {
        RatMatrix shifted = T;
        for (int i = 0; i <= D; ++i) shifted.at(i, i) -= Rational(t);
        if (rref(shifted).rank < D + 1) out.emplace_back(t);
    }
    return out;
}

std::vector<EigenData> integer_spectrum(const RatMatrix& A, const std::vector<Rational>& candidates) {
    if (!A.is_square()) throw std::invalid_argument("spectrum of non-square matrix");
    int n = A.rows();
    std::vector<Rational> cand = candidates;
    if (cand.empty()) {
        // Exhaustive integer scan within the infinity-norm bound.
        Integer bound = 0;
        for (int i = 0; i < n; ++i) {
            Rational s = 0;
            for (int j = 0; j < n; ++j) s += abs(A.at(i, j));
            if (!is_integer(s)) throw std::invalid_argument("matrix is not integral");
            if (s.get_num() > bound) bound = s.get_num();
        }
        for (Integer t = bound; t >= -bound; --t) cand.emplace_back(t);
    }
    std::sort(cand.begin(), cand.end(), std::greater<Rational>());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<EigenData> out;
    int total = 0;
    for (const auto& theta : cand) {
        Subspace s = eigenspace(A, theta);
        if (s.is_zero()) continue;
        total += s.dim();
        out.push_back({theta, s.dim(), std::move(s)});
    }
    if (total != n)
        throw std::domain_error(
            "spectrum is not integral: eigenspaces cover " + std::to_string(total) + " of " +
            std::to_string(n) + " dimensions");
    return out;
}

std::vector<RatMatrix> primitive_idempotents(const RatMatrix& A, const std::vector<Rational>& thetas) {
    std::set<Rational> seen(thetas.begin(), thetas.end());
    if (seen.size() != thetas.size()) throw std::invalid_argument("repeated eigenvalue");
    int n = A.rows();
    int m = static_cast<int>(thetas.size());
    std::vector<RatMatrix> E;
    E.reserve(m);
    for (int i = 0; i < m; ++i) {
        RatMatrix prod = RatMatrix::identity(n);
        Rational denom = 1;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            RatMatrix shifted = A;
            for (int d = 0; d < n; ++d) shifted.at(d, d) -= thetas[j];
            prod = prod * shifted;
            denom *= thetas[i] - thetas[j];
        }
        E.push_back(Rational(1) / denom * prod);
    }
    RatMatrix sum(n, n);
    for (const auto& e : E) sum = sum + e;
    if (!(sum == RatMatrix::identity(n)))
        throw std::logic_error("idempotents do not sum to the identity");
    return E;
}

KreinTensor krein_parameters(const std::vector<RatMatrix>& E, const std::vector<int>& mult) {
    int m = static_cast<int>(E.size());
    int n = E.front().rows();
    KreinTensor q(m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, Rational(0))));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            RatMatrix had = E[i].hadamard(E[j]);
            for (int h = 0; h < m; ++h) {
                Rational tr = 0;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        if (had.at(a, b) != 0 && E[h].at(b, a) != 0)
                            tr += had.at(a, b) * E[h].at(b, a);
                Rational val = Rational(n) * tr / Rational(mult[h]);
                if (val < 0)
                    throw std::domain_error("negative Krein parameter q^" + std::to_string(h) +
                                            "_{" + std::to_string(i) + "," + std::to_string(j) + "} = " +
                                            rat_str(val));
                q[h][i][j] = val;
                q[h][j][i] = val;
            }
        }
    return q;
}

bool q_poly_pattern_ok(const KreinTensor& krein, const std::vector<int>& order) {
    int m = static_cast<int>(order.size());
    for (int h = 0; h < m; ++h)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const Rational& v = krein[order[h]][order[i]][order[j]];
                bool too_far = h > i + j || i > h + j || j > h + i;
                bool tight = h == i + j || i == h + j || j == h + i;
                if (too_far && v != 0) return false;
                if (tight && !too_far && v == 0) return false;
            }
    return true;
}

std::vector<std::vector<int>> q_poly_orderings(const KreinTensor& krein) {
    int m = static_cast<int>(krein.size());
    std::vector<std::vector<int>> found;
    if (m == 1) {
        found.push_back({0});
        return found;
    }
    // Try each idempotent as E_1 and chain through the q^h_{1,prev} != 0 pattern.
    for (int s = 1; s < m; ++s) {
        std::vector<int> order{0, s};
        std::vector<bool> used(m, false);
        used[0] = used[s] = true;
        bool ok = true;
        while (static_cast<int>(order.size()) < m && ok) {
            int prev = order.back();
            int next = -1;
            for (int l = 0; l < m; ++l) {
                if (used[l] || krein[l][s][prev] == 0) continue;
                if (next >= 0) {
                    ok = false;  // branching chain: not a P-polynomial-style path
                    break;
                }
                next = l;
            }
            if (next < 0) ok = false;
            if (ok) {
                order.push_back(next);
                used[next] = true;
            }
        }
        if (ok && q_poly_pattern_ok(krein, order)) found.push_back(order);
    }
    return found;
}

std::vector<Rational> dual_polar_thetas(const Graph& g) {
    const DualPolarInfo& dp = *g.dual_polar;
    int D = g.spec.D;
    std::vector<Rational> out;
    for (int i = 0; i <= D; ++i) {
        Rational v = (Rational(dp.a1 + 1) * Rational(int_pow(dp.q, D - i)) -
                      Rational(int_pow(dp.q, i)) - Rational(dp.a1)) /
                     Rational(dp.q - 1);
        out.push_back(v);
    }
    return out;
}

std::vector<Rational> dual_polar_dual_thetas(const Graph& g) {
    const DualPolarInfo& dp = *g.dual_polar;
    int D = g.spec.D;
    // theta*_i = (q^(D+e) + q)/(q^e + 1) * (q^(-i)(q^(D+e) + 1) - q^e - 1)/(q - 1)
    Rational qDe = dp.q_half_power(2 * D + dp.e_times_2);
    Rational qe = dp.q_half_power(dp.e_times_2);
    Rational front = (qDe + Rational(dp.q)) / (qe + 1);
    std::vector<Rational> out;
    for (int i = 0; i <= D; ++i) {
        Rational qmi = make_rational(1, int_pow(dp.q, i));
        out.push_back(front * (qmi * (qDe + 1) - qe - 1) / Rational(dp.q - 1));
    }
    return out;
}

SpectralData analyze_spectrum(const Graph& g, const DistanceData& dd, const DRCheck& dr) {
    RatMatrix A = g.adjacency_matrix();
    std::vector<EigenData> natural = integer_spectrum(A, eigenvalue_candidates(dr));
    if (static_cast<int>(natural.size()) != dd.D + 1)
        throw std::domain_error("distance-regular graph must have D+1 distinct eigenvalues");

    std::vector<Rational> theta_nat;
    std::vector<int> mult_nat;
    for (const auto& e : natural) {
        theta_nat.push_back(e.theta);
        mult_nat.push_back(e.mult);
    }
    std::vector<RatMatrix> E_nat = primitive_idempotents(A, theta_nat);
    KreinTensor krein_nat = krein_parameters(E_nat, mult_nat);
    std::vector<std::vector<int>> orderings = q_poly_orderings(krein_nat);

    SpectralData sd;
    sd.orderings_found = orderings;

    std::vector<int> chosen;
    if (g.is_dual_polar()) {
        // The closed-form ordering, located inside the natural spectrum.
        std::vector<Rational> want = dual_polar_thetas(g);
        for (const auto& w : want) {
            auto it = std::find(theta_nat.begin(), theta_nat.end(), w);
            if (it == theta_nat.end())
                throw std::domain_error("closed-form eigenvalue " + rat_str(w) +
                                        " is not in the spectrum");
            chosen.push_back(static_cast<int>(it - theta_nat.begin()));
        }
        if (!q_poly_pattern_ok(krein_nat, chosen))
            throw std::domain_error("closed-form dual polar ordering fails the Q-polynomial pattern");
    } else if (!orderings.empty()) {
        chosen = *std::min_element(orderings.begin(), orderings.end());
    } else {
        // Not Q-polynomial; keep the natural order and flag it.
        chosen.resize(theta_nat.size());
        for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = static_cast<int>(i);
        sd.q_polynomial = false;
        sd.chosen_order = chosen;
        for (int idx : chosen) {
            sd.theta.push_back(theta_nat[idx]);
            sd.mult.push_back(mult_nat[idx]);
            sd.eigenspaces.push_back(natural[idx].space);
            sd.E.push_back(E_nat[idx]);
        }
        sd.krein = krein_nat;
        return sd;
    }

    sd.q_polynomial = true;
    sd.chosen_order = chosen;
    int m = static_cast<int>(chosen.size());
    for (int idx : chosen) {
        sd.theta.push_back(theta_nat[idx]);
        sd.mult.push_back(mult_nat[idx]);
        sd.eigenspaces.push_back(natural[idx].space);
        sd.E.push_back(E_nat[idx]);
    }
    sd.krein.assign(m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m)));
    for (int h = 0; h < m; ++h)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) sd.krein[h][i][j] = krein_nat[chosen[h]][chosen[i]][chosen[j]];
    return sd;
}

RatMatrix BaseContext::estar_matrix(int i) const {
    RatMatrix m(n(), n());
    for (int v : sphere[i]) m.at(v, v) = 1;
    return m;
}

RatMatrix BaseContext::astar_matrix(int i) const { return RatMatrix::diagonal(astar_diag[i]); }

std::vector<Rational> BaseContext::estar_apply(int i, const std::vector<Rational>& v) const {
    std::vector<Rational> out(v.size(), Rational(0));
    for (int y : sphere[i]) out[y] = v[y];
    return out;
}

Subspace BaseContext::estar_image(int i, const Subspace& s) const {
    std::vector<std::vector<Rational>> gens;
    for (int r = 0; r < s.dim(); ++r) gens.push_back(estar_apply(i, s.basis_vector(r)));
    return Subspace::span(n(), gens);
}

Subspace BaseContext::coordinate_prefix(int i) const {
    std::vector<std::vector<Rational>> gens;
    for (int d = 0; d <= i; ++d)
        for (int y : sphere[d]) {
            std::vector<Rational> e(n(), Rational(0));
            e[y] = 1;
            gens.push_back(std::move(e));
        }
    return Subspace::span(n(), gens);
}

Subspace BaseContext::spectral_prefix(int j) const {
    Subspace acc = Subspace::zero(n());
    for (int i = 0; i <= j; ++i) acc = sum(acc, spec.eigenspaces[i]);
    return acc;
}

BaseContext base_context(const Graph& g, DistanceData dd, DRCheck dr, SpectralData sd, int x) {
    if (x < 0 || x >= g.num_vertices()) throw std::invalid_argument("base vertex out of range");
    BaseContext ctx;
    ctx.graph = std::make_shared<Graph>(g);
    ctx.dist = std::move(dd);
    ctx.dr = std::move(dr);
    ctx.spec = std::move(sd);
    ctx.x = x;
    ctx.A = g.adjacency_matrix();
    int n = g.num_vertices();
    int D = ctx.dist.D;
    ctx.sphere.assign(D + 1, {});
    for (int y = 0; y < n; ++y) ctx.sphere[ctx.dist.dist[x][y]].push_back(y);

    ctx.astar_diag.assign(D + 1, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i <= D; ++i)
        for (int y = 0; y < n; ++y) ctx.astar_diag[i][y] = Rational(n) * ctx.spec.E[i].at(x, y);

    // Dual eigenvalues: the A* = A*_1 diagonal must be constant on every sphere.
    ctx.theta_star.resize(D + 1);
    for (int i = 0; i <= D; ++i) {
        const Rational& first = ctx.astar_diag[1][ctx.sphere[i].front()];
        for (int y : ctx.sphere[i])
            if (ctx.astar_diag[1][y] != first)
                throw std::domain_error(
                    "A* diagonal is not constant on sphere " + std::to_string(i) +
                    ": the chosen ordering is not Q-polynomial");
        ctx.theta_star[i] = first;
    }
    std::set<Rational> distinct(ctx.theta_star.begin(), ctx.theta_star.end());
    if (distinct.size() != ctx.theta_star.size())
        throw std::domain_error("dual eigenvalues are not mutually distinct");
    return ctx;
}

CheckList verify_algebra_relations(const BaseContext& ctx) {
    CheckList checks;
    int n = ctx.n();
    int D = ctx.D();
    const RatMatrix& A = ctx.A;
    const std::vector<RatMatrix>& E = ctx.spec.E;

    {
        bool ok = true;
        std::string detail;
        RatMatrix sum(n, n);
        for (const auto& e : E) sum = sum + e;
        if (!(sum == RatMatrix::identity(n))) {
            ok = false;
            detail = "sum E_i != I";
        }
        for (int i = 0; i <= D && ok; ++i) {
            RatMatrix lhs = A * E[i];
            RatMatrix rhs = ctx.spec.theta[i] * E[i];
            if (!(lhs == rhs)) {
                ok = false;
                detail = "A E_" + std::to_string(i) + " != theta_" + std::to_string(i) + " E_" +
                         std::to_string(i);
            }
            if (!(E[i].trace() == Rational(ctx.spec.mult[i]))) {
                ok = false;
                detail = "trace E_" + std::to_string(i) + " != multiplicity";
            }
        }
        if (ok && !(E[0] == make_rational(1, n) * RatMatrix::all_ones(n))) {
            ok = false;
            detail = "E_0 != J/|X|";
        }
        checks.require(ok, "BoseMesner", detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i <= D && ok; ++i)
            for (int j = 0; j <= D && ok; ++j) {
                RatMatrix prod = E[i] * E[j];
                if (i == j ? !(prod == E[i]) : !prod.is_zero()) {
                    ok = false;
                    detail = "E_i E_j failure at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        checks.require(ok, "idempotentProducts", detail);
    }

    // Triple products, h = 1 and h = D, on both sides. The i = j entries
    // (h = 1) and i + j > D entries (h = D) are unconstrained.
    auto star_sandwich_zero = [&](const RatMatrix& mid, int i, int j) {
        for (int u : ctx.sphere[i])
            for (int v : ctx.sphere[j])
                if (mid.at(u, v) != 0) return false;
        return true;
    };
    auto dual_sandwich_zero = [&](const std::vector<Rational>& diag, int i, int j) {
        // E_i diag E_j via column scaling, one dense product per pair.
        RatMatrix scaled = E[i];
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (scaled.at(r, c) != 0) scaled.at(r, c) *= diag[c];
        return (scaled * E[j]).is_zero();
    };
    auto pattern = [](int i, int j, int split, bool zero) -> bool {
        // split = 1: tridiagonal pattern in |i-j|; split = 0 handled by caller.
        if (std::abs(i - j) > split && !zero) return false;
        if (std::abs(i - j) == split && zero) return false;
        return true;
    };
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i <= D && ok; ++i)
            for (int j = 0; j <= D && ok; ++j) {
                if (i == j) continue;
                if (!pattern(i, j, 1, star_sandwich_zero(A, i, j))) {
                    ok = false;
                    detail = "E*_i A E*_j pattern failure at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                }
            }
        checks.require(ok, "tripleProductA", detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i <= D && ok; ++i)
            for (int j = 0; j <= D && ok; ++j) {
                if (i == j) continue;
                if (!pattern(i, j, 1, dual_sandwich_zero(ctx.astar_diag[1], i, j))) {
                    ok = false;
                    detail = "E_i A* E_j pattern failure at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                }
            }
        checks.require(ok, "tripleProductAstar", detail);
    }
    {
        bool ok = true;
        std::string detail;
        const RatMatrix& AD = ctx.dist.A[D];
        for (int i = 0; i <= D && ok; ++i)
            for (int j = 0; j <= D && ok; ++j) {
                if (i + j > D) continue;
                bool zero = star_sandwich_zero(AD, i, j);
                if ((i + j < D && !zero) || (i + j == D && zero)) {
                    ok = false;
                    detail = "E*_i A_D E*_j pattern failure at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                }
            }
        checks.require(ok, "tripleProductAD", detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i <= D && ok; ++i)
            for (int j = 0; j <= D && ok; ++j) {
                if (i + j > D) continue;
                bool zero = dual_sandwich_zero(ctx.astar_diag[D], i, j);
                if ((i + j < D && !zero) || (i + j == D && zero)) {
                    ok = false;
                    detail = "E_i A*_D E_j pattern failure at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                }
            }
        checks.require(ok, "tripleProductAstarD", detail);
    }

    // ADinv: A_D and A*_D are invertible.
    {
        bool ok = rref(ctx.dist.A[D]).rank == n;
        bool ok2 = true;
        for (const auto& d : ctx.astar_diag[D])
            if (d == 0) ok2 = false;
        checks.require(ok && ok2, "ADinv",
                       ok ? "A*_D has a zero diagonal entry" : "A_D is singular");
    }

    // Three-term recurrence A A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}.
    {
        bool ok = true;
        for (int i = 0; i <= D && ok; ++i) {
            RatMatrix rhs = Rational(ctx.dr.a[i]) * ctx.dist.A[i];
            if (i > 0) rhs = rhs + Rational(ctx.dr.b[i - 1]) * ctx.dist.A[i - 1];
            if (i < D) rhs = rhs + Rational(ctx.dr.c[i + 1]) * ctx.dist.A[i + 1];
            if (!(A * ctx.dist.A[i] == rhs)) ok = false;
        }
        checks.require(ok, "threeTerm", "A A_i recurrence failure");
    }

    // rank E_i = m_i (trace was matched above).
    {
        bool ok = true;
        for (int i = 0; i <= D; ++i)
            if (rref(E[i]).rank != ctx.spec.mult[i]) ok = false;
        checks.require(ok, "idempotentRank", "rank E_i != multiplicity");
    }

    // Dual Bose-Mesner data: sum A*_i = |X| E*_0 and A*_i A*_j = sum_h q^h_{ij} A*_h.
    {
        bool ok = true;
        std::vector<Rational> total(n, Rational(0));
        for (int i = 0; i <= D; ++i)
            for (int y = 0; y < n; ++y) total[y] += ctx.astar_diag[i][y];
        for (int y = 0; y < n; ++y) {
            Rational want = (y == ctx.x) ? Rational(n) : Rational(0);
            if (total[y] != want) ok = false;
        }
        checks.require(ok, "dualDistanceSum", "sum A*_i != |X| E*_0");
    }
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i <= D && ok; ++i)
            for (int j = 0; j <= D && ok; ++j) {
                for (int y = 0; y < n; ++y) {
                    Rational lhs = ctx.astar_diag[i][y] * ctx.astar_diag[j][y];
                    Rational rhs = 0;
                    for (int h = 0; h <= D; ++h) rhs += ctx.spec.krein[h][i][j] * ctx.astar_diag[h][y];
                    if (lhs != rhs) {
                        ok = false;
                        detail = "A*_i A*_j != sum q^h_{ij} A*_h at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")";
                        break;
                    }
                }
            }
        checks.require(ok, "dualProductKrein", detail);
    }

    if (ctx.graph->is_dual_polar()) {
        std::vector<Rational> want = dual_polar_thetas(*ctx.graph);
        bool ok = want == ctx.spec.theta;
        checks.require(ok, "ev", "closed-form theta_i mismatch");
        std::vector<Rational> wantStar = dual_polar_dual_thetas(*ctx.graph);
        bool ok2 = wantStar == ctx.theta_star;
        checks.require(ok2, "dualEv", "closed-form theta*_i mismatch");
    } else {
        checks.skip("ev", "closed forms apply to dual polar graphs only");
        checks.skip("dualEv", "closed forms apply to dual polar graphs only");
    }
    return checks;
}

}  // namespace nlab
