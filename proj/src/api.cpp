#include "nucleuslab/api.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nlab {

namespace {

constexpr int kLargeThreshold = 500;  // vertices; beyond this an explicit opt-in is required

Json params_to_json(const Graph& g) {
    Json p = Json::object();
    switch (g.spec.family) {
        case Family::Hypercube:
        case Family::Odd: p["D"] = g.spec.D; break;
        case Family::Hamming:
            p["D"] = g.spec.D;
            p["N"] = g.spec.N;
            break;
        case Family::Imported: break;
        default:
            p["D"] = g.spec.D;
            p["q"] = static_cast<long>(g.spec.q);
            break;
    }
    return p;
}

Json label_to_json(const Graph& g, int v) {
    if (g.is_dual_polar()) {
        const FFSubspace& s = g.dual_polar->vertices[v];
        Json rows = Json::array();
        for (const auto& row : s.basis()) {
            Json r = Json::array();
            for (unsigned c : row) r.push_back(c);
            rows.push_back(std::move(r));
        }
        return rows;
    }
    return g.labels[v];
}

Json rationals_to_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(rational_to_string(v));
    return out;
}

Json longs_to_json(const std::vector<long>& values) {
    Json out = Json::array();
    for (long v : values) out.push_back(v);
    return out;
}

struct Pipeline {
    Graph g;
    DistanceData dd;
    DRCheck dr;
    SpectralData sd;
};

// Family construction or JSON import, plus the shared size gate.
Graph resolve_graph(const RunConfig& config) {
    if (config.family) return build_family(*config.family);
    if (!config.graph_json.empty()) {
        Json doc = Json::parse(config.graph_json, nullptr, false);
        if (doc.is_discarded()) throw std::invalid_argument("input is not valid JSON");
        try {
            return graph_from_json(doc);
        } catch (const Json::exception& e) {
            throw std::invalid_argument(std::string("malformed graph document: ") + e.what());
        }
    }
    throw std::invalid_argument("no graph given: pass a family or a graph document");
}

Json failure_output(const Graph& g, const DRCheck& dr) {
    Json out;
    out["family"] = family_name(g.spec.family);
    out["params"] = params_to_json(g);
    out["num_vertices"] = g.num_vertices();
    out["distance_regular"] = false;
    if (dr.witness) {
        const DRWitness& w = *dr.witness;
        out["witness"] = Json{{"x", w.x},       {"y", w.y},           {"h", w.h},
                              {"i", w.i},       {"j", w.j},           {"expected", w.expected},
                              {"got", w.got},   {"text", w.describe()}};
    }
    return out;
}

}  // namespace

Json checks_to_json(const CheckList& checks) {
    Json out = Json::array();
    for (const auto& r : checks.results()) {
        Json item;
        item["name"] = r.name;
        item["status"] = status_name(r.status);
        if (!r.detail.empty()) item["detail"] = r.detail;
        out.push_back(std::move(item));
    }
    return out;
}

Json graph_to_json(const Graph& g) {
    Json out;
    out["family"] = family_name(g.spec.family);
    out["params"] = params_to_json(g);
    Json vertices = Json::array();
    for (int v = 0; v < g.num_vertices(); ++v) vertices.push_back(label_to_json(g, v));
    out["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.adj[u])
            if (u < v) edges.push_back(Json::array({u, v}));
    out["adjacency"] = std::move(edges);
    return out;
}

Graph graph_from_json(const Json& doc) {
    std::string fam = doc.value("family", std::string("imported"));
    auto family = family_from_name(fam);
    if (!family) throw std::invalid_argument("unknown family: " + fam);
    if (*family != Family::Imported) {
        // Rebuild through the family constructor; the document's params are the
        // source of truth and the vertex order is canonical either way.
        const Json& p = doc.at("params");
        FamilySpec spec;
        spec.family = *family;
        spec.D = p.value("D", 1);
        spec.q = p.value("q", 2L);
        spec.N = p.value("N", 2);
        return build_family(spec);
    }
    const Json& vertices = doc.at("vertices");
    int n = static_cast<int>(vertices.size());
    std::vector<std::string> labels;
    for (const auto& v : vertices) labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("adjacency")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return graph_from_edges(n, edges, std::move(labels));
}

FamilySpec parse_family_spec(const std::string& family, int D, long q, int N) {
    auto f = family_from_name(family);
    if (!f || *f == Family::Imported)
        throw std::invalid_argument("unknown family '" + family +
                                    "' (expected hypercube, hamming, odd, B, C, D, 2A-even, 2A-odd)");
    FamilySpec spec;
    spec.family = *f;
    spec.D = D;
    spec.N = N;
    if (family_is_dual_polar(*f)) {
        unsigned p, n;
        if (q < 2 || !factor_prime_power(static_cast<unsigned long>(q), p, n))
            throw std::invalid_argument(std::to_string(q) + " is not a prime power");
        spec.q = static_cast<unsigned long>(q);
    }
    return spec;
}

RunResult run_generate(const RunConfig& config) {
    RunResult res;
    if (!config.family) throw std::invalid_argument("generate needs a family");
    res.output = graph_to_json(build_family(*config.family));
    return res;
}

namespace {

Pipeline run_pipeline(const RunConfig& config) {
    Pipeline pl{resolve_graph(config), {}, {}, {}};
    if (pl.g.num_vertices() > kLargeThreshold && !config.large)
        throw std::invalid_argument("instance has " + std::to_string(pl.g.num_vertices()) +
                                    " vertices; pass --large to run it");
    pl.dd = distance_data(pl.g);
    if (pl.dd.D < 1) throw std::invalid_argument("graph must have diameter at least 1");
    pl.dr = check_distance_regular(pl.g, pl.dd);
    if (pl.dr.distance_regular) pl.sd = analyze_spectrum(pl.g, pl.dd, pl.dr);
    return pl;
}

}  // namespace

RunResult run_analyze(const RunConfig& config) {
    RunResult res;
    Pipeline pl = run_pipeline(config);
    if (!pl.dr.distance_regular) {
        res.exit_code = 1;
        res.output = failure_output(pl.g, pl.dr);
        return res;
    }
    Json out;
    out["family"] = family_name(pl.g.spec.family);
    out["params"] = params_to_json(pl.g);
    out["num_vertices"] = pl.g.num_vertices();
    out["distance_regular"] = true;
    out["diameter"] = pl.dd.D;
    out["intersection_array"] = Json{{"b", longs_to_json({pl.dr.b.begin(), pl.dr.b.end() - 1})},
                                     {"c", longs_to_json({pl.dr.c.begin() + 1, pl.dr.c.end()})}};
    out["c"] = longs_to_json(pl.dr.c);
    out["a"] = longs_to_json(pl.dr.a);
    out["b"] = longs_to_json(pl.dr.b);
    out["k"] = longs_to_json(pl.dr.k);
    out["eigenvalues"] = rationals_to_json(pl.sd.theta);
    Json mult = Json::array();
    for (int m : pl.sd.mult) mult.push_back(m);
    out["multiplicities"] = std::move(mult);
    out["q_polynomial"] = pl.sd.q_polynomial;

    Json orderings = Json::array();
    for (const auto& ord : pl.sd.orderings_found) {
        // Report orderings as eigenvalue lists; positions refer to the natural
        // (descending) spectrum before reordering.
        std::vector<Rational> natural = pl.sd.theta;
        std::sort(natural.begin(), natural.end(), std::greater<Rational>());
        std::vector<Rational> listed;
        for (int idx : ord) listed.push_back(natural[idx]);
        orderings.push_back(rationals_to_json(listed));
    }
    out["qpoly_orderings"] = std::move(orderings);

    // Krein zero pattern in the chosen ordering.
    Json pattern = Json::array();
    int m = static_cast<int>(pl.sd.theta.size());
    for (int h = 0; h < m; ++h) {
        Json rows = Json::array();
        for (int i = 0; i < m; ++i) {
            Json row = Json::array();
            for (int j = 0; j < m; ++j) row.push_back(pl.sd.krein[h][i][j] != 0 ? 1 : 0);
            rows.push_back(std::move(row));
        }
        pattern.push_back(std::move(rows));
    }
    out["krein_zero_pattern"] = std::move(pattern);

    if (!pl.sd.q_polynomial) {
        out["error"] = "graph is not Q-polynomial for any idempotent ordering";
        res.exit_code = 1;
        res.output = std::move(out);
        return res;
    }

    BaseContext ctx = base_context(pl.g, pl.dd, pl.dr, pl.sd, config.base_vertex);
    out["base_vertex"] = config.base_vertex;
    out["dual_eigenvalues"] = rationals_to_json(ctx.theta_star);
    res.output = std::move(out);
    return res;
}

namespace {

Json module_to_json(const BaseContext& ctx, const TModuleData& m) {
    Json out;
    out["endpoint"] = m.endpoint;
    out["dual_endpoint"] = m.dual_endpoint;
    out["diameter"] = m.diameter;
    out["displacement"] = m.displacement;
    Json shape = Json::array();
    for (int s : m.shape) shape.push_back(s);
    out["shape"] = std::move(shape);
    out["dim"] = m.basis.dim();
    out["thin"] = m.thin;
    out["irreducible_certified"] = m.irreducible_certified;
    out["checks"] = checks_to_json(verify_td_system(ctx, m).checks);
    return out;
}

Json subspace_rows(const FFSubspace& s) {
    Json rows = Json::array();
    for (const auto& row : s.basis()) {
        Json r = Json::array();
        for (unsigned c : row) r.push_back(c);
        rows.push_back(std::move(r));
    }
    return rows;
}

Json poset_to_json(const BaseContext& ctx, const PosetP& poset) {
    Json out;
    const DualPolarInfo& dp = *ctx.graph->dual_polar;
    out["num_elements"] = static_cast<int>(poset.elements.size());
    Json sizes = Json::array();
    for (const auto& g : poset.by_grade) sizes.push_back(static_cast<int>(g.size()));
    out["grade_sizes"] = std::move(sizes);
    Json elements = Json::array();
    for (std::size_t e = 0; e < poset.elements.size(); ++e) {
        Json el;
        el["grade"] = poset.grade[e];
        el["basis"] = subspace_rows(poset.elements[e]);
        elements.push_back(std::move(el));
    }
    out["elements"] = std::move(elements);
    Json covers = Json::array();
    for (std::size_t e = 0; e < poset.elements.size(); ++e)
        for (int f : poset.up[e]) covers.push_back(Json::array({static_cast<int>(e), f}));
    out["covers"] = std::move(covers);
    Json triples = Json::array();
    for (int r = 0; r < poset.M.rows(); ++r)
        for (int c = 0; c < poset.M.cols(); ++c)
            if (poset.M.at(r, c) != 0)
                triples.push_back(Json::array({r, c, rational_to_string(poset.M.at(r, c))}));
    out["M"] = std::move(triples);
    // The shift relating M to the weighted adjacency map of the projective
    // geometry (recorded, not asserted).
    out["identity_shift"] = rational_to_string(Rational(dp.a1) / Rational(dp.q - 1));
    out["checks"] = checks_to_json(poset.cert);
    return out;
}

struct NucleusRun {
    BaseContext ctx;
    NucleusData nd;
    CheckList checks;             // everything certified along the way
    std::optional<EquivClasses> classes;
    std::optional<PosetP> poset;
};

NucleusRun full_nucleus_run(Pipeline& pl, const RunConfig& config, bool with_projgeom) {
    NucleusRun run{base_context(pl.g, pl.dd, pl.dr, pl.sd, config.base_vertex), {}, {}, {}, {}};
    BaseContext& ctx = run.ctx;
    run.checks.merge(verify_algebra_relations(ctx));

    if (ctx.graph->is_dual_polar()) {
        DualPolarReport rep = verify_dual_polar_parameters(*ctx.graph, ctx.dr);
        std::string detail;
        for (const auto& mm : rep.mismatches)
            detail += mm.array + "[" + std::to_string(mm.index) + "] = " + mm.got +
                      " expected " + mm.expected + "; ";
        run.checks.require(rep.ok, "inter", detail);
    } else {
        run.checks.skip("inter", "closed forms apply to dual polar graphs only");
    }

    run.nd = compute_nucleus(ctx);
    decompose_nucleus(ctx, run.nd);
    run.checks.merge(run.nd.cert);
    run.checks.merge(verify_nucleus_theorems(ctx, run.nd));

    // Fold the per-module tridiagonal-system reports by check name.
    {
        std::map<std::string, std::pair<bool, std::string>> folded;
        std::vector<std::string> order;
        for (std::size_t i = 0; i < run.nd.modules.size(); ++i) {
            TDSystemReport rep = verify_td_system(ctx, run.nd.modules[i]);
            for (const auto& r : rep.checks.results()) {
                if (r.status == CheckStatus::Skip) continue;
                auto it = folded.find(r.name);
                if (it == folded.end()) {
                    order.push_back(r.name);
                    it = folded.emplace(r.name, std::make_pair(true, std::string())).first;
                }
                if (r.status == CheckStatus::Fail && it->second.first) {
                    it->second.first = false;
                    it->second.second = "module " + std::to_string(i) + ": " + r.detail;
                }
            }
        }
        for (const auto& name : order) {
            const auto& [ok, detail] = folded.at(name);
            run.checks.require(ok, name, detail);
        }
    }

    // Isomorphism between same-endpoint constituents.
    {
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; a < run.nd.modules.size() && ok; ++a)
            for (std::size_t b = a + 1; b < run.nd.modules.size() && ok; ++b) {
                if (run.nd.modules[a].endpoint != run.nd.modules[b].endpoint) continue;
                IsoReport iso = module_isomorphism(ctx, run.nd.modules[a], run.nd.modules[b]);
                if (!iso.isomorphic) {
                    ok = false;
                    detail = "modules " + std::to_string(a) + " and " + std::to_string(b) +
                             " failed the explicit isomorphism";
                }
            }
        run.checks.require(ok, "nucISO", detail);
    }

    if (with_projgeom && ctx.graph->nonbipartite_dual_polar()) {
        run.classes = sim_classes(ctx);
        run.checks.merge(run.classes->cert);
        run.poset = build_poset(ctx, *run.classes);
        run.checks.merge(run.poset->cert);
        run.checks.merge(pmain_operator(ctx, *run.poset));
        {
            CheckList ns2;
            bool ok = true;
            std::string detail;
            for (int i = 0; i <= ctx.D(); ++i) {
                CheckList per = verify_ns2(ctx, *run.poset, i);
                if (!per.all_passed()) {
                    ok = false;
                    detail = "failure at i = " + std::to_string(i);
                }
            }
            run.checks.require(ok, "NS2", detail);
        }
        // eta_vee over the whole poset (subsumes the per-eta WGC certification),
        // and closure spot checks against it.
        {
            bool ok = true;
            std::string detail;
            for (std::size_t e = 0; e < run.poset->elements.size(); ++e) {
                WGCSubgraph omega = eta_vee(ctx, run.poset->elements[e]);
                if (!omega.cert.all_passed()) {
                    ok = false;
                    detail = "eta #" + std::to_string(e);
                    break;
                }
            }
            run.checks.require(ok, "etaV", detail);
        }
        {
            bool ok = true;
            std::string detail;
            for (int i = 1; i <= ctx.D(); ++i) {
                int far = ctx.sphere[i].front();
                WGCSubgraph omega = wgc_closure(ctx, ctx.x, far);
                if (!omega.cert.all_passed()) {
                    ok = false;
                    detail = "closure(x, y) at distance " + std::to_string(i);
                    break;
                }
            }
            run.checks.require(ok, "WGCfind", detail);
        }
    } else if (with_projgeom) {
        for (const char* name : {"simE", "cc.size", "cc.count", "SZ", "YYi", "bij", "Pmain.A",
                                 "Pmain.Astar", "equit", "equit1", "equit2.up", "equit2.down",
                                 "NS2", "etaV", "WGCfind"})
            run.checks.skip(name, "needs a nonbipartite dual polar graph");
    }
    return run;
}

}  // namespace

RunResult run_nucleus(const RunConfig& config) {
    RunResult res;
    Pipeline pl = run_pipeline(config);
    if (!pl.dr.distance_regular) {
        res.exit_code = 1;
        res.output = failure_output(pl.g, pl.dr);
        return res;
    }
    if (!pl.sd.q_polynomial) {
        res.exit_code = 1;
        res.output = failure_output(pl.g, pl.dr);
        res.output["distance_regular"] = true;
        res.output["error"] = "graph is not Q-polynomial";
        return res;
    }
    NucleusRun run = full_nucleus_run(pl, config, true);
    const BaseContext& ctx = run.ctx;
    const NucleusData& nd = run.nd;

    Json out;
    out["family"] = family_name(pl.g.spec.family);
    out["params"] = params_to_json(pl.g);
    out["num_vertices"] = pl.g.num_vertices();
    out["base_vertex"] = config.base_vertex;
    out["dim_N"] = nd.N.dim();
    Json ni = Json::array(), en = Json::array(), een = Json::array();
    for (int i = 0; i <= ctx.D(); ++i) {
        ni.push_back(nd.Ni[i].dim());
        en.push_back(nd.estarN[i].dim());
        een.push_back(nd.eN[i].dim());
    }
    out["dim_Ni"] = std::move(ni);
    out["dim_estar_N"] = std::move(en);
    out["dim_e_N"] = std::move(een);
    Json mult = Json::array();
    for (int m : nd.mult) mult.push_back(m);
    out["mult"] = std::move(mult);
    Json modules = Json::array();
    for (const auto& m : nd.modules) modules.push_back(module_to_json(ctx, m));
    out["modules"] = std::move(modules);

    // Reported, not asserted: does each E*_i N admit the component basis?
    {
        Json flags = Json::array();
        for (int i = 0; i <= ctx.D(); ++i) {
            auto comps = sphere_components(ctx, i);
            bool ok = static_cast<int>(comps.size()) == nd.estarN[i].dim();
            for (const auto& comp : comps) {
                std::vector<Rational> v(ctx.n(), Rational(0));
                for (int y : comp) v[y] = 1;
                if (!nd.estarN[i].contains(v)) ok = false;
            }
            flags.push_back(ok);
        }
        out["component_basis_per_slice"] = std::move(flags);
    }

    if (ctx.graph->nonbipartite_dual_polar()) {
        Json agreement;
        bool spectral_ok = true, comps_ok = true;
        for (int i = 0; i <= ctx.D(); ++i) {
            Subspace proj = estar_nucleus(ctx, nd, i, EstarMethod::Projection);
            if (!(proj == estar_nucleus(ctx, nd, i, EstarMethod::LocalSpectral))) spectral_ok = false;
            if (!(proj == estar_nucleus(ctx, nd, i, EstarMethod::Components))) comps_ok = false;
        }
        agreement["local_spectral"] = spectral_ok;
        agreement["components"] = comps_ok;
        out["method_agreement"] = std::move(agreement);

        Json census;
        Json counts = Json::array(), sizes = Json::array();
        for (int i = 0; i <= ctx.D(); ++i) {
            counts.push_back(static_cast<int>(run.classes->classes[i].size()));
            sizes.push_back(static_cast<int>(run.classes->classes[i].front().size()));
        }
        census["counts"] = std::move(counts);
        census["sizes"] = std::move(sizes);
        out["class_census"] = std::move(census);
        out["poset"] = poset_to_json(ctx, *run.poset);
    }

    out["checks"] = checks_to_json(run.checks);
    res.exit_code = run.checks.all_passed() ? 0 : 1;
    res.output = std::move(out);
    return res;
}

RunResult run_verify(const RunConfig& config) {
    RunResult res;
    Pipeline pl = run_pipeline(config);

    CheckList checks;
    checks.require(pl.dr.distance_regular, "DRG",
                   pl.dr.witness ? pl.dr.witness->describe() : "");
    if (!pl.dr.distance_regular) {
        res.output = failure_output(pl.g, pl.dr);
        res.output["checks"] = checks_to_json(checks);
        res.exit_code = 1;
        return res;
    }
    checks.require(pl.dr.triangle_pattern_ok, "pPattern",
                   pl.dr.triangle_pattern_failure.value_or(""));
    if (pl.dd.D >= 1) {
        bool ok = true;
        long k = pl.dr.k[1];
        for (int i = 0; i <= pl.dd.D; ++i) {
            if (pl.dr.c[i] + pl.dr.a[i] + pl.dr.b[i] != k) ok = false;
            if (i >= 1 && pl.dr.k[i] * pl.dr.c[i] != pl.dr.k[i - 1] * pl.dr.b[i - 1]) ok = false;
        }
        checks.require(ok, "kiRecurrence", "c_i + a_i + b_i != k or k_i c_i != k_{i-1} b_{i-1}");
    }
    checks.require(pl.sd.q_polynomial, "QPoly", "no valid idempotent ordering found");

    Json out;
    out["family"] = family_name(pl.g.spec.family);
    out["params"] = params_to_json(pl.g);
    out["num_vertices"] = pl.g.num_vertices();
    out["base_vertex"] = config.base_vertex;

    if (!pl.sd.q_polynomial) {
        out["checks"] = checks_to_json(checks);
        res.output = std::move(out);
        res.exit_code = 1;
        return res;
    }

    NucleusRun run = full_nucleus_run(pl, config, true);
    checks.merge(run.checks);

    // Apply the --only filter to the reported set.
    CheckList reported;
    if (config.only.empty()) {
        reported = checks;
    } else {
        auto matches = [&](const std::string& name) {
            std::string lower = name;
            std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
            for (std::string want : config.only) {
                std::transform(want.begin(), want.end(), want.begin(), ::tolower);
                if (lower.find(want) != std::string::npos) return true;
            }
            return false;
        };
        for (const auto& r : checks.results())
            if (matches(r.name)) {
                if (r.status == CheckStatus::Pass) reported.pass(r.name, r.detail);
                if (r.status == CheckStatus::Fail) reported.fail(r.name, r.detail);
                if (r.status == CheckStatus::Skip) reported.skip(r.name, r.detail);
            }
    }

    if (!config.only.empty() && reported.results().empty())
        throw std::invalid_argument("no checks match the --only filter");

    out["checks"] = checks_to_json(reported);
    int pass = 0, fail = 0, skip = 0;
    for (const auto& r : reported.results()) {
        if (r.status == CheckStatus::Pass) ++pass;
        if (r.status == CheckStatus::Fail) ++fail;
        if (r.status == CheckStatus::Skip) ++skip;
    }
    out["summary"] = Json{{"pass", pass}, {"fail", fail}, {"skip", skip}};
    out["ok"] = fail == 0;
    res.output = std::move(out);
    res.exit_code = fail == 0 ? 0 : 1;
    return res;
}

}  // namespace nlab
