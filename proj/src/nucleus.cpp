#include "nucleuslab/nucleus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nlab {

std::vector<Subspace> nucleus_spaces(const BaseContext& ctx) {
    int D = ctx.D();
    std::vector<Subspace> out;
    out.reserve(D + 1);
    for (int i = 0; i <= D; ++i)
        out.push_back(intersect(ctx.coordinate_prefix(i), ctx.spectral_prefix(D - i)));
    return out;
}

NucleusData compute_nucleus(const BaseContext& ctx) {
    int D = ctx.D();
    int n = ctx.n();
    NucleusData nd;
    nd.Ni = nucleus_spaces(ctx);

    // zeroInt: the i + j < D intersections vanish.
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i <= D && ok; ++i)
            for (int j = 0; i + j < D; ++j) {
                if (!intersect(ctx.coordinate_prefix(i), ctx.spectral_prefix(j)).is_zero()) {
                    ok = false;
                    detail = "nonzero at (i,j) = (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
        nd.cert.require(ok, "zeroInt", detail);
    }

    nd.N = Subspace::zero(n);
    int dim_sum = 0;
    for (const auto& s : nd.Ni) {
        nd.N = sum(nd.N, s);
        dim_sum += s.dim();
    }
    nd.cert.require(nd.N.dim() == dim_sum, "UDir", "sum of N_i is not direct");

    // T-invariance of N.
    {
        bool ok = true;
        for (int b = 0; b < nd.N.dim() && ok; ++b) {
            std::vector<Rational> v = nd.N.basis_vector(b);
            if (!nd.N.contains(ctx.A.apply(v))) ok = false;
            if (ok && !nd.N.contains(diag_apply(ctx.astar_diag[1], v))) ok = false;
        }
        nd.cert.require(ok, "ND.invariant", "N is not a T-module");
    }

    // AAact shift relations.
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i <= D && ok; ++i) {
            for (int b = 0; b < nd.Ni[i].dim(); ++b) {
                std::vector<Rational> v = nd.Ni[i].basis_vector(b);
                std::vector<Rational> up = ctx.A.apply(v);
                for (int s = 0; s < n; ++s) up[s] -= ctx.spec.theta[D - i] * v[s];
                bool up_ok = (i < D) ? nd.Ni[i + 1].contains(up)
                                     : std::all_of(up.begin(), up.end(),
                                                   [](const Rational& r) { return r == 0; });
                std::vector<Rational> down = diag_apply(ctx.astar_diag[1], v);
                for (int s = 0; s < n; ++s) down[s] -= ctx.theta_star[i] * v[s];
                bool down_ok = (i > 0) ? nd.Ni[i - 1].contains(down)
                                       : std::all_of(down.begin(), down.end(),
                                                     [](const Rational& r) { return r == 0; });
                if (!up_ok || !down_ok) {
                    ok = false;
                    detail = "shift relation fails at N_" + std::to_string(i);
                    break;
                }
            }
        }
        nd.cert.require(ok, "AAact", detail);
    }

    for (int i = 0; i <= D; ++i) {
        nd.estarN.push_back(ctx.estar_image(i, nd.N));
        nd.eN.push_back(image(ctx.E(i), nd.N));
    }

    // TwoSum: both slice sums rebuild N, orthogonally and directly.
    {
        auto check_sum = [&](const std::vector<Subspace>& slices, const char* name) {
            Subspace total = Subspace::zero(n);
            int dims = 0;
            bool orth = true;
            for (int i = 0; i <= D; ++i) {
                total = sum(total, slices[i]);
                dims += slices[i].dim();
                for (int j = i + 1; j <= D; ++j)
                    if (!are_orthogonal(slices[i], slices[j])) orth = false;
            }
            nd.cert.require(total == nd.N && dims == nd.N.dim() && orth, name,
                            "slice sum is not an orthogonal direct decomposition of N");
        };
        check_sum(nd.estarN, "TwoSum.estar");
        check_sum(nd.eN, "TwoSum.e");
    }

    // The orthogonal complement of N is T-invariant and meets every N_i trivially.
    {
        Subspace comp = orth_complement(nd.N, Subspace::full(n));
        bool ok = true;
        for (int b = 0; b < comp.dim() && ok; ++b) {
            std::vector<Rational> v = comp.basis_vector(b);
            if (!comp.contains(ctx.A.apply(v))) ok = false;
            if (ok && !comp.contains(diag_apply(ctx.astar_diag[1], v))) ok = false;
        }
        for (int i = 0; i <= D && ok; ++i)
            if (!intersect(comp, nd.Ni[i]).is_zero()) ok = false;
        nd.cert.require(ok, "ND.complement", "orthogonal complement misbehaves");
    }
    return nd;
}

std::vector<std::vector<int>> sphere_components(const BaseContext& ctx, int i) {
    const std::vector<int>& sphere = ctx.sphere[i];
    std::vector<int> index_of(ctx.n(), -1);
    for (std::size_t idx = 0; idx < sphere.size(); ++idx) index_of[sphere[idx]] = static_cast<int>(idx);
    std::vector<int> comp(sphere.size(), -1);
    int comps = 0;
    for (std::size_t s = 0; s < sphere.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{static_cast<int>(s)};
        comp[s] = comps;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int nb : ctx.graph->adj[sphere[u]]) {
                int v = index_of[nb];
                if (v >= 0 && comp[v] < 0) {
                    comp[v] = comps;
                    stack.push_back(v);
                }
            }
        }
        ++comps;
    }
    std::vector<std::vector<int>> out(comps);
    for (std::size_t s = 0; s < sphere.size(); ++s) out[comp[s]].push_back(sphere[s]);
    for (auto& c : out) std::sort(c.begin(), c.end());
    return out;
}

Subspace estar_nucleus(const BaseContext& ctx, const NucleusData& nd, int i, EstarMethod method) {
    switch (method) {
        case EstarMethod::Projection: return ctx.estar_image(i, nd.N);
        case EstarMethod::LocalSpectral: {
            if (!ctx.graph->nonbipartite_dual_polar())
                throw std::invalid_argument("local-spectral route needs a nonbipartite dual polar graph");
            const std::vector<int>& sphere = ctx.sphere[i];
            int m = static_cast<int>(sphere.size());
            RatMatrix local(m, m);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    if (ctx.graph->adjacent(sphere[a], sphere[b])) local.at(a, b) = 1;
            Subspace eig = eigenspace(local, Rational(ctx.dr.a[i]));
            std::vector<std::vector<Rational>> gens;
            for (int b = 0; b < eig.dim(); ++b) {
                std::vector<Rational> lifted(ctx.n(), Rational(0));
                std::vector<Rational> small = eig.basis_vector(b);
                for (int a = 0; a < m; ++a) lifted[sphere[a]] = small[a];
                gens.push_back(std::move(lifted));
            }
            return Subspace::span(ctx.n(), gens);
        }
        case EstarMethod::Components: {
            if (!ctx.graph->nonbipartite_dual_polar())
                throw std::invalid_argument("component route needs a nonbipartite dual polar graph");
            std::vector<std::vector<Rational>> gens;
            for (const auto& comp : sphere_components(ctx, i)) {
                std::vector<Rational> v(ctx.n(), Rational(0));
                for (int y : comp) v[y] = 1;
                gens.push_back(std::move(v));
            }
            return Subspace::span(ctx.n(), gens);
        }
    }
    throw std::logic_error("unreachable");
}

void decompose_nucleus(const BaseContext& ctx, NucleusData& nd) {
    int D = ctx.D();
    nd.modules.clear();
    nd.mult.assign(D / 2 + 1, 0);
    for (int r = 0; r <= D / 2; ++r) {
        const Subspace& level = nd.estarN[r];
        while (true) {
            Subspace covered = Subspace::zero(ctx.n());
            for (const auto& w : nd.modules) covered = sum(covered, w.estar_slices[r]);
            Subspace fresh = orth_complement(covered, level);
            if (fresh.is_zero()) break;

            Subspace w = t_closure(ctx, fresh.basis_vector(0));
            TModuleData data = module_profile(ctx, w);
            std::ostringstream who;
            who << "module at endpoint " << r << " (#" << nd.modules.size() << ")";
            if (data.endpoint != r)
                throw std::domain_error(who.str() + ": endpoint " + std::to_string(data.endpoint));
            if (data.dual_endpoint != r || data.diameter != D - 2 * r || data.displacement != 0)
                throw std::domain_error(who.str() + ": not a displacement-zero module (t=" +
                                        std::to_string(data.dual_endpoint) +
                                        ", d=" + std::to_string(data.diameter) + ")");
            std::string why;
            if (!certify_thin_irreducible(ctx, data, &why))
                throw std::domain_error(who.str() + ": irreducibility certificate failed: " + why);
            if (!nd.N.contains(data.basis))
                throw std::domain_error(who.str() + ": closure escaped the nucleus");
            nd.modules.push_back(std::move(data));
            ++nd.mult[r];
        }
    }

    // The found modules must rebuild N as an orthogonal direct sum.
    int dims = 0;
    Subspace total = Subspace::zero(ctx.n());
    bool orth = true;
    for (std::size_t a = 0; a < nd.modules.size(); ++a) {
        dims += nd.modules[a].basis.dim();
        total = sum(total, nd.modules[a].basis);
        for (std::size_t b = a + 1; b < nd.modules.size(); ++b)
            if (!are_orthogonal(nd.modules[a].basis, nd.modules[b].basis)) orth = false;
    }
    nd.cert.require(total == nd.N && dims == nd.N.dim() && orth, "ND.decompose",
                    "modules do not rebuild N as an orthogonal direct sum");
    nd.cert.require(!nd.mult.empty() && nd.mult[0] == 1, "mult0", "primary multiplicity != 1");
}

CheckList verify_nucleus_theorems(const BaseContext& ctx, const NucleusData& nd) {
    CheckList checks;
    int D = ctx.D();

    // Six: the six subspace families share the dimension sum_{r<=i} mult_r.
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; 2 * i <= D && ok; ++i) {
            int want = 0;
            for (int r = 0; r <= i; ++r) want += nd.mult[r];
            std::vector<int> dims = {nd.eN[i].dim(),     nd.eN[D - i].dim(),
                                     nd.estarN[i].dim(), nd.estarN[D - i].dim(),
                                     nd.Ni[i].dim(),     nd.Ni[D - i].dim()};
            for (int got : dims)
                if (got != want) {
                    ok = false;
                    detail = "dimension " + std::to_string(got) + " != " + std::to_string(want) +
                             " at i = " + std::to_string(i);
                }
        }
        checks.require(ok, "Six", detail);
    }

    // sum_r mult_r (D - 2r + 1) = dim N.
    {
        int total = 0;
        for (int r = 0; r < static_cast<int>(nd.mult.size()); ++r)
            total += nd.mult[r] * (D - 2 * r + 1);
        checks.require(total == nd.N.dim(), "multDimSum", "sum mult_r (D - 2r + 1) != dim N");
    }

    bool ndp = ctx.graph->nonbipartite_dual_polar();
    if (!ndp) {
        checks.skip("END", "q-binomial formulas need a nonbipartite dual polar graph");
        checks.skip("Ndimf", "q-binomial formulas need a nonbipartite dual polar graph");
        checks.skip("multFormula", "q-binomial formulas need a nonbipartite dual polar graph");
        checks.skip("multN", "component counts need a nonbipartite dual polar graph");
        checks.skip("LastSub", "needs a nonbipartite dual polar graph");
        checks.skip("DPNUC", "needs a nonbipartite dual polar graph");
        checks.skip("NPart", "needs a nonbipartite dual polar graph");
        return checks;
    }

    const Integer& q = ctx.graph->dual_polar->q;
    {
        bool ok = true;
        for (int i = 0; i <= D; ++i)
            if (Integer(nd.estarN[i].dim()) != q_binomial(D, i, q)) ok = false;
        checks.require(ok, "END", "dim E*_i N != [D choose i]_q");
    }
    {
        Integer want = 0;
        for (int i = 0; i <= D; ++i) want += q_binomial(D, i, q);
        checks.require(Integer(nd.N.dim()) == want, "Ndimf", "dim N != sum of q-binomials");
    }
    {
        bool ok = nd.mult[0] == 1;
        for (int r = 1; r < static_cast<int>(nd.mult.size()); ++r)
            if (Integer(nd.mult[r]) != q_binomial(D, r, q) - q_binomial(D, r - 1, q)) ok = false;
        checks.require(ok, "multFormula", "mult_r != [D,r]_q - [D,r-1]_q");
    }
    {
        bool ok = true;
        for (int i = 0; 2 * i <= D; ++i) {
            int want = 0;
            for (int r = 0; r <= i; ++r) want += nd.mult[r];
            if (static_cast<int>(sphere_components(ctx, i).size()) != want) ok = false;
            if (static_cast<int>(sphere_components(ctx, D - i).size()) != want) ok = false;
        }
        checks.require(ok, "multN", "component counts disagree with partial mult sums");
    }
    checks.require(sphere_components(ctx, D).size() == 1, "LastSub",
                   "the last subconstituent is disconnected");

    // Method agreement (DPNUC and NPart).
    {
        bool spectral_ok = true, comp_ok = true;
        for (int i = 0; i <= D; ++i) {
            Subspace proj = estar_nucleus(ctx, nd, i, EstarMethod::Projection);
            if (!(proj == estar_nucleus(ctx, nd, i, EstarMethod::LocalSpectral)))
                spectral_ok = false;
            if (!(proj == estar_nucleus(ctx, nd, i, EstarMethod::Components))) comp_ok = false;
        }
        checks.require(spectral_ok, "DPNUC", "E*_i N != local a_i eigenspace");
        checks.require(comp_ok, "NPart", "E*_i N != span of component characteristic vectors");
    }
    return checks;
}

}  // namespace nlab
