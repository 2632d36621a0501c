#include "nucleuslab/projgeom.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nlab {

namespace {

void require_dual_polar(const BaseContext& ctx, bool nonbipartite) {
    if (!ctx.graph->is_dual_polar())
        throw std::invalid_argument("operation needs a dual polar context");
    if (nonbipartite && !ctx.graph->nonbipartite_dual_polar())
        throw std::invalid_argument("operation needs a nonbipartite dual polar context");
}

FFSubspace vertex_meet(const BaseContext& ctx, int y, int z) {
    return ff_intersect(ctx.graph->dual_polar->vertices[y], ctx.graph->dual_polar->vertices[z]);
}

}  // namespace

EquivClasses sim_classes(const BaseContext& ctx) {
    require_dual_polar(ctx, true);
    int D = ctx.D();
    const DualPolarInfo& dp = *ctx.graph->dual_polar;
    EquivClasses out;
    out.classes.resize(D + 1);
    out.keys.resize(D + 1);

    bool agree = true;
    bool sizes_ok = true;
    bool counts_ok = true;
    for (int i = 0; i <= D; ++i) {
        // Route 1: connected components of the sphere.
        std::vector<std::vector<int>> comps = sphere_components(ctx, i);
        // Route 2: group the sphere on the key x ^ y.
        std::map<std::vector<unsigned>, std::vector<int>> by_key;
        std::map<std::vector<unsigned>, FFSubspace> key_space;
        for (int y : ctx.sphere[i]) {
            FFSubspace meet = vertex_meet(ctx, ctx.x, y);
            by_key[meet.encode()].push_back(y);
            key_space.emplace(meet.encode(), meet);
        }
        std::vector<std::vector<int>> grouped;
        for (auto& [key, members] : by_key) {
            std::sort(members.begin(), members.end());
            grouped.push_back(members);
        }
        std::sort(comps.begin(), comps.end());
        std::sort(grouped.begin(), grouped.end());
        if (comps != grouped) agree = false;

        Integer want_size = int_pow(dp.a1 + 1, i) * int_pow(dp.q, static_cast<unsigned long>(i) * (i - 1) / 2);
        for (const auto& c : comps)
            if (Integer(static_cast<long>(c.size())) != want_size) sizes_ok = false;
        if (Integer(static_cast<long>(comps.size())) != q_binomial(D, i, dp.q)) counts_ok = false;

        out.classes[i] = grouped;
        for (const auto& members : grouped)
            out.keys[i].push_back(vertex_meet(ctx, ctx.x, members.front()));
    }
    if (!agree)
        throw std::domain_error("component classes and x^y classes disagree");
    out.cert.pass("simE");
    out.cert.require(sizes_ok, "cc.size", "class size != (a1+1)^i q^binom(i,2)");
    out.cert.require(counts_ok, "cc.count", "class count != [D choose i]_q");
    return out;
}

PosetP build_poset(const BaseContext& ctx, const EquivClasses& classes) {
    require_dual_polar(ctx, false);
    int D = ctx.D();
    const DualPolarInfo& dp = *ctx.graph->dual_polar;
    const FFSubspace& x_space = dp.vertices[ctx.x];

    PosetP poset;
    for (int dim = D; dim >= 0; --dim) {
        // Grade i holds the subspaces of dimension D - i.
        for (auto& s : enumerate_subspaces(x_space, dim)) {
            poset.elements.push_back(std::move(s));
            poset.grade.push_back(D - dim);
        }
    }
    int count = static_cast<int>(poset.elements.size());
    poset.by_grade.assign(D + 1, {});
    for (int e = 0; e < count; ++e) poset.by_grade[poset.grade[e]].push_back(e);

    {
        bool ok = true;
        for (int i = 0; i <= D; ++i)
            if (Integer(static_cast<long>(poset.by_grade[i].size())) != q_binomial(D, D - i, dp.q))
                ok = false;
        poset.cert.require(ok, "SZ", "|P_i| != [D choose i]_q");
    }

    poset.up.assign(count, {});
    poset.down.assign(count, {});
    for (int e = 0; e < count; ++e)
        for (int f = 0; f < count; ++f) {
            if (poset.grade[f] != poset.grade[e] + 1) continue;
            // f sits one grade up (dimension one lower) and must be covered by e.
            if (poset.elements[e].contains(poset.elements[f])) {
                poset.up[e].push_back(f);
                poset.down[f].push_back(e);
            }
        }
    {
        bool ok = true;
        for (int e = 0; e < count; ++e) {
            int i = poset.grade[e];
            if (Integer(static_cast<long>(poset.up[e].size())) !=
                (i < D ? q_int(D - i, dp.q) : Integer(0)))
                ok = false;
            if (Integer(static_cast<long>(poset.down[e].size())) !=
                (i > 0 ? q_int(i, dp.q) : Integer(0)))
                ok = false;
        }
        poset.cert.require(ok, "YYi", "cover counts differ from [i]_q / [D-i]_q");
    }

    // eta^N vectors.
    poset.etaN.assign(count, std::vector<Rational>(ctx.n(), Rational(0)));
    for (int y = 0; y < ctx.n(); ++y) {
        FFSubspace meet = vertex_meet(ctx, ctx.x, y);
        auto it = std::find(poset.elements.begin(), poset.elements.end(), meet);
        if (it == poset.elements.end())
            throw std::domain_error("x ^ y is not a subspace of x");
        poset.etaN[it - poset.elements.begin()][y] = 1;
    }

    // bij: eta -> eta^N lands bijectively on the class characteristic vectors.
    {
        bool ok = true;
        int matched = 0;
        for (int e = 0; e < count; ++e) {
            int i = poset.grade[e];
            bool found = false;
            for (std::size_t c = 0; c < classes.classes[i].size() && !found; ++c) {
                if (classes.keys[i][c] == poset.elements[e]) {
                    found = true;
                    std::vector<Rational> want(ctx.n(), Rational(0));
                    for (int y : classes.classes[i][c]) want[y] = 1;
                    if (want != poset.etaN[e]) ok = false;
                }
            }
            if (found)
                ++matched;
            else
                ok = false;
        }
        int total_classes = 0;
        for (const auto& per : classes.classes) total_classes += static_cast<int>(per.size());
        poset.cert.require(ok && matched == total_classes && count == total_classes, "bij",
                           "eta -> eta^N is not a bijection onto the class vectors");
    }
    return poset;
}

namespace {

// Measured intersection numbers of an induced subgraph known to preserve distances.
struct SubgraphCensus {
    bool distance_regular = true;
    int diameter = 0;
    std::vector<long> c, a, b;
};

SubgraphCensus census(const BaseContext& ctx, const std::vector<int>& vertices) {
    SubgraphCensus out;
    for (int u : vertices)
        for (int v : vertices) out.diameter = std::max(out.diameter, ctx.dist.dist[u][v]);
    out.c.assign(out.diameter + 1, -1);
    out.a.assign(out.diameter + 1, -1);
    out.b.assign(out.diameter + 1, -1);
    for (int u : vertices)
        for (int v : vertices) {
            int h = ctx.dist.dist[u][v];
            long cc = 0, aa = 0, bb = 0;
            for (int w : vertices) {
                if (!ctx.graph->adjacent(v, w)) continue;
                int d = ctx.dist.dist[u][w];
                if (d == h - 1) ++cc;
                if (d == h) ++aa;
                if (d == h + 1) ++bb;
            }
            auto put = [&](std::vector<long>& arr, long val) {
                if (arr[h] < 0)
                    arr[h] = val;
                else if (arr[h] != val)
                    out.distance_regular = false;
            };
            put(out.c, cc);
            put(out.a, aa);
            put(out.b, bb);
        }
    return out;
}

bool weak_geodetically_closed(const BaseContext& ctx, const std::vector<int>& vertices) {
    std::vector<char> inside(ctx.n(), 0);
    for (int v : vertices) inside[v] = 1;
    for (int y : vertices)
        for (int z : vertices) {
            int d = ctx.dist.dist[y][z];
            for (int xi = 0; xi < ctx.n(); ++xi)
                if (!inside[xi] && ctx.dist.dist[y][xi] + ctx.dist.dist[xi][z] <= d + 1) return false;
        }
    return true;
}

}  // namespace

WGCSubgraph eta_vee(const BaseContext& ctx, const FFSubspace& eta) {
    require_dual_polar(ctx, false);
    const DualPolarInfo& dp = *ctx.graph->dual_polar;
    if (!dp.vertices[ctx.x].contains(eta)) throw std::invalid_argument("eta is not a subspace of x");

    WGCSubgraph out;
    for (int y = 0; y < ctx.n(); ++y)
        if (dp.vertices[y].contains(eta)) out.vertices.push_back(y);

    int i = ctx.D() - eta.dim();
    for (int u : out.vertices)
        for (int v : out.vertices) out.diameter = std::max(out.diameter, ctx.dist.dist[u][v]);
    out.cert.require(out.diameter == i, "etaV.diameter", "diameter != D - dim eta");
    out.cert.require(weak_geodetically_closed(ctx, out.vertices), "etaV.wgc",
                     "vertex set is not weak-geodetically closed");

    // Top sphere = { xi : x ^ xi = eta }.
    {
        std::vector<int> top, keyed;
        for (int v : out.vertices)
            if (ctx.dist_to_x(v) == i) top.push_back(v);
        for (int y : ctx.sphere[i])
            if (vertex_meet(ctx, ctx.x, y) == eta) keyed.push_back(y);
        out.cert.require(top == keyed, "etaV.top", "Omega ^ Gamma_i(x) != {xi : x ^ xi = eta}");
    }

    SubgraphCensus cs = census(ctx, out.vertices);
    out.c.assign(cs.c.begin(), cs.c.end());
    out.a.assign(cs.a.begin(), cs.a.end());
    bool params_ok = cs.distance_regular;
    for (int h = 0; h <= out.diameter && params_ok; ++h) {
        if (cs.c[h] != ctx.dr.c[h]) params_ok = false;
        if (cs.a[h] != ctx.dr.a[h]) params_ok = false;
    }
    out.cert.require(params_ok, "WGC.params",
                     "subgraph parameters differ from c_i, a_i of the ambient graph");
    return out;
}

WGCSubgraph wgc_closure(const BaseContext& ctx, int y, int z) {
    int n = ctx.n();
    if (y < 0 || z < 0 || y >= n || z >= n) throw std::invalid_argument("vertex out of range");
    int target = ctx.dist.dist[y][z];

    std::vector<char> inside(n, 0);
    inside[y] = inside[z] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = 0; u < n; ++u) {
            if (!inside[u]) continue;
            for (int v = 0; v < n; ++v) {
                if (!inside[v]) continue;
                int d = ctx.dist.dist[u][v];
                for (int xi = 0; xi < n; ++xi)
                    if (!inside[xi] && ctx.dist.dist[u][xi] + ctx.dist.dist[xi][v] <= d + 1) {
                        inside[xi] = 1;
                        grew = true;
                    }
            }
        }
    }

    WGCSubgraph out;
    for (int v = 0; v < n; ++v)
        if (inside[v]) out.vertices.push_back(v);
    for (int u : out.vertices)
        for (int v : out.vertices) out.diameter = std::max(out.diameter, ctx.dist.dist[u][v]);
    if (out.diameter != target)
        throw std::domain_error("closure diameter " + std::to_string(out.diameter) +
                                " escaped d(y,z) = " + std::to_string(target));
    out.cert.pass("WGCfind.diameter");
    out.cert.require(weak_geodetically_closed(ctx, out.vertices), "WGCfind.closed",
                     "fixpoint is not weak-geodetically closed");

    if (ctx.graph->is_dual_polar() && inside[ctx.x]) {
        int far = -1;
        for (int v : out.vertices)
            if (ctx.dist_to_x(v) == out.diameter) far = v;
        if (far >= 0) {
            WGCSubgraph viaEta = eta_vee(ctx, vertex_meet(ctx, ctx.x, far));
            out.cert.require(viaEta.vertices == out.vertices, "WGCsame",
                             "closure != eta_vee(x ^ y')");
        }
    }
    return out;
}

CheckList verify_ns2(const BaseContext& ctx, const PosetP& poset, int i) {
    require_dual_polar(ctx, true);
    CheckList checks;
    std::vector<std::vector<int>> comps = sphere_components(ctx, i);
    std::sort(comps.begin(), comps.end());

    std::vector<std::vector<int>> images;
    for (int e = 0; e < static_cast<int>(poset.elements.size()); ++e) {
        if (poset.grade[e] != i) continue;
        WGCSubgraph omega = eta_vee(ctx, poset.elements[e]);
        std::vector<int> top;
        for (int v : omega.vertices)
            if (ctx.dist_to_x(v) == i) top.push_back(v);
        images.push_back(top);
    }
    std::sort(images.begin(), images.end());
    bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
    checks.require(injective, "NS2.injective", "two subgraphs map to one component");
    checks.require(images == comps, "NS2.bijective",
                   "Omega -> Omega ^ Gamma_i(x) misses components or overshoots");
    return checks;
}

CheckList pmain_operator(const BaseContext& ctx, PosetP& poset) {
    require_dual_polar(ctx, true);
    CheckList checks;
    const DualPolarInfo& dp = *ctx.graph->dual_polar;
    int count = static_cast<int>(poset.elements.size());

    // Closed-form operator on P.
    poset.M = RatMatrix(count, count);
    for (int e = 0; e < count; ++e) {
        int i = poset.grade[e];
        poset.M.at(e, e) = Rational(dp.a1) * Rational(q_int(i, dp.q));
        for (int f : poset.up[e]) poset.M.at(f, e) = 1;
        for (int f : poset.down[e])
            poset.M.at(f, e) = Rational(dp.a1 + 1) * Rational(int_pow(dp.q, i - 1));
    }

    // Matrix identity on the nucleus basis: A eta^N = sum_zeta M[zeta][eta] zeta^N.
    {
        bool ok = true;
        std::string detail;
        for (int e = 0; e < count && ok; ++e) {
            std::vector<Rational> lhs = ctx.A.apply(poset.etaN[e]);
            std::vector<Rational> rhs(ctx.n(), Rational(0));
            for (int f = 0; f < count; ++f) {
                const Rational& w = poset.M.at(f, e);
                if (w == 0) continue;
                for (int yv = 0; yv < ctx.n(); ++yv)
                    if (poset.etaN[f][yv] != 0) rhs[yv] += w * poset.etaN[f][yv];
            }
            if (lhs != rhs) {
                ok = false;
                detail = "A eta^N mismatch at element " + std::to_string(e);
            }
        }
        checks.require(ok, "Pmain.A", detail);
    }
    {
        bool ok = true;
        for (int e = 0; e < count && ok; ++e) {
            int i = poset.grade[e];
            std::vector<Rational> lhs = diag_apply(ctx.astar_diag[1], poset.etaN[e]);
            for (int yv = 0; yv < ctx.n() && ok; ++yv)
                if (lhs[yv] != ctx.theta_star[i] * poset.etaN[e][yv]) ok = false;
        }
        checks.require(ok, "Pmain.Astar", "A* eta^N != theta*_i eta^N");
    }

    // Vertexwise equitable-partition constants (equit, equit1, equit2).
    {
        // Class of each vertex = its poset element index.
        std::vector<int> class_of(ctx.n(), -1);
        for (int e = 0; e < count; ++e)
            for (int yv = 0; yv < ctx.n(); ++yv)
                if (poset.etaN[e][yv] != 0) class_of[yv] = e;

        bool equit_ok = true;
        std::vector<std::vector<long>> edge_profile(count, std::vector<long>(count, -1));
        for (int yv = 0; yv < ctx.n() && equit_ok; ++yv) {
            std::vector<long> row(count, 0);
            for (int nb : ctx.graph->adj[yv]) ++row[class_of[nb]];
            int e = class_of[yv];
            for (int f = 0; f < count; ++f) {
                if (edge_profile[e][f] < 0)
                    edge_profile[e][f] = row[f];
                else if (edge_profile[e][f] != row[f])
                    equit_ok = false;
            }
        }
        checks.require(equit_ok, "equit", "the class partition is not equitable");

        bool diag_ok = true, up_ok = true, down_ok = true;
        for (int e = 0; e < count && equit_ok; ++e) {
            int i = poset.grade[e];
            if (edge_profile[e][e] != ctx.dr.a[i]) diag_ok = false;
            for (int f = 0; f < count; ++f) {
                if (f == e || edge_profile[e][f] <= 0) continue;
                int fi = poset.grade[f];
                if (fi == i + 1) {
                    // f is deeper by one sphere; each vertex of class e must see
                    // (a1+1) q^{fi-1} of them, and each vertex of f exactly 1 of e.
                    Integer want = (dp.a1 + 1) * int_pow(dp.q, fi - 1);
                    if (Integer(edge_profile[e][f]) != want) down_ok = false;
                    if (edge_profile[f][e] != 1) up_ok = false;
                } else if (fi != i - 1 && fi != i) {
                    up_ok = false;  // edges may only join adjacent spheres
                }
            }
        }
        checks.require(diag_ok, "equit1", "within-class valency != a_i");
        checks.require(up_ok, "equit2.up", "a vertex sees more than one class upward");
        checks.require(down_ok, "equit2.down", "downward degree != (a1+1) q^{i-1}");
    }
    return checks;
}

}  // namespace nlab
