// Acceptance suite: one criterion per line, exact expectations throughout.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "nucleuslab/api.hpp"

using namespace nlab;

namespace {

int failures = 0;

void criterion(const std::string& name, double budget_seconds,
               const std::function<void(std::ostringstream&)>& body) {
    std::ostringstream problems;
    auto start = std::chrono::steady_clock::now();
    try {
        body(problems);
    } catch (const std::exception& e) {
        problems << "exception: " << e.what() << "; ";
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds)
        problems << "took " << elapsed << "s (budget " << budget_seconds << "s); ";
    std::string text = problems.str();
    if (text.empty()) {
        std::printf("PASS  %-34s (%.2fs)\n", name.c_str(), elapsed);
    } else {
        ++failures;
        std::printf("FAIL  %-34s (%.2fs): %s\n", name.c_str(), elapsed, text.c_str());
    }
    std::fflush(stdout);
}

template <typename T>
void expect_eq(std::ostringstream& out, const T& got, const T& want, const std::string& what) {
    if (!(got == want)) out << what << " mismatch; ";
}

void expect(std::ostringstream& out, bool ok, const std::string& what) {
    if (!ok) out << what << "; ";
}

struct Instance {
    Graph g;
    DistanceData dd;
    DRCheck dr;
    SpectralData sd;
    BaseContext ctx;
    NucleusData nd;
};

Instance load(const FamilySpec& spec) {
    Graph g = build_family(spec);
    DistanceData dd = distance_data(g);
    DRCheck dr = check_distance_regular(g, dd);
    if (!dr.distance_regular) throw std::runtime_error("instance is not distance-regular");
    SpectralData sd = analyze_spectrum(g, dd, dr);
    BaseContext ctx = base_context(g, dd, dr, sd, 0);
    Instance inst{std::move(g), std::move(dd), std::move(dr), std::move(sd), std::move(ctx), {}};
    inst.nd = compute_nucleus(inst.ctx);
    decompose_nucleus(inst.ctx, inst.nd);
    return inst;
}

std::vector<int> estar_dims(const NucleusData& nd) {
    std::vector<int> out;
    for (const auto& s : nd.estarN) out.push_back(s.dim());
    return out;
}

void expect_checks(std::ostringstream& out, const CheckList& checks, const std::string& where) {
    for (const auto& r : checks.results())
        if (r.status == CheckStatus::Fail) out << where << "." << r.name << ": " << r.detail << "; ";
}

std::vector<Rational> rats(const std::vector<std::string>& v) {
    std::vector<Rational> out;
    for (const auto& s : v) out.push_back(rational_from_string(s));
    return out;
}

}  // namespace

int main() {
    criterion("1 C_2(2) basics", 1.0, [](std::ostringstream& out) {
        Instance inst = load({Family::DualPolarC, 2, 2});
        expect_eq(out, inst.dr.b, {6, 4, 0}, "b array");
        expect_eq(out, inst.dr.c, {0, 1, 3}, "c array");
        expect_eq(out, inst.sd.theta, rats({"6", "1", "-3"}), "theta");
        expect_eq(out, inst.ctx.theta_star, rats({"9", "3/2", "-9/4"}), "theta*");
        expect_eq(out, estar_dims(inst.nd), {1, 3, 1}, "dim E*_i N");
        expect_eq(out, inst.nd.N.dim(), 5, "dim N");
        expect_eq(out, inst.nd.mult, {1, 2}, "mult");
        auto comps1 = sphere_components(inst.ctx, 1);
        expect(out, comps1.size() == 3, "Gamma_1(x) component count");
        for (const auto& c : comps1) expect(out, c.size() == 2, "Gamma_1(x) component size");
        auto comps2 = sphere_components(inst.ctx, 2);
        expect(out, comps2.size() == 1 && comps2[0].size() == 8, "Gamma_2(x) connectivity");
    });

    criterion("2 C_3(2) nucleus", 60.0, [](std::ostringstream& out) {
        Instance inst = load({Family::DualPolarC, 3, 2});
        expect_eq(out, inst.g.num_vertices(), 135, "|X|");
        expect_eq(out, estar_dims(inst.nd), {1, 7, 7, 1}, "dim E*_i N");
        expect_eq(out, inst.nd.N.dim(), 16, "dim N");
        expect_eq(out, inst.nd.mult, {1, 6}, "mult");
        int fours = 0, twos = 0;
        for (const auto& m : inst.nd.modules) {
            if (m.basis.dim() == 4) ++fours;
            if (m.basis.dim() == 2) ++twos;
        }
        expect(out, fours == 1 && twos == 6 && inst.nd.modules.size() == 7, "module dims");
        EquivClasses cls = sim_classes(inst.ctx);
        std::vector<std::size_t> sizes;
        for (int i = 0; i <= 3; ++i) sizes.push_back(cls.classes[i].front().size());
        expect_eq(out, sizes, {1, 2, 8, 64}, "class sizes");
    });

    criterion("3 B_2(3) nucleus", 5.0, [](std::ostringstream& out) {
        Instance inst = load({Family::DualPolarB, 2, 3});
        expect_eq(out, inst.g.num_vertices(), 40, "|X|");
        expect_eq(out, inst.g.dual_polar->a1, Integer(2), "a_1");
        expect_eq(out, estar_dims(inst.nd), {1, 4, 1}, "dim E*_i N");
        expect_eq(out, inst.nd.mult, {1, 3}, "mult");
        EquivClasses cls = sim_classes(inst.ctx);
        PosetP poset = build_poset(inst.ctx, cls);
        expect_checks(out, pmain_operator(inst.ctx, poset), "pmain");
        int bottom = poset.by_grade[2][0];
        for (int f : poset.down[bottom])
            expect_eq(out, poset.M.at(f, bottom), Rational(9), "down-coefficient at i=2");
    });

    criterion("4 elementary examples", 30.0, [](std::ostringstream& out) {
        for (int D : {2, 3, 4}) {
            Instance cube = load({Family::Hypercube, D});
            expect(out, cube.nd.N.dim() == (1 << D), "cube dim N");
            expect(out, cube.nd.N == Subspace::full(cube.g.num_vertices()),
                   "cube nucleus = V (D=" + std::to_string(D) + ")");
        }
        Instance h23 = load({Family::Hamming, 2, 2, 3});
        expect(out, h23.nd.N.dim() == 4, "H(2,3) dim N");
        Instance h33 = load({Family::Hamming, 3, 2, 3});
        expect(out, h33.nd.N.dim() == 8, "H(3,3) dim N");
        Instance odd = load({Family::Odd, 3});
        expect(out, odd.nd.N.dim() == 4, "O_4 dim N");
        std::vector<Rational> xhat(odd.g.num_vertices(), Rational(0));
        xhat[odd.ctx.x] = 1;
        expect(out, odd.nd.N == t_closure(odd.ctx, xhat), "O_4 nucleus = primary module");
    });

    criterion("5 three-method agreement", 90.0, [](std::ostringstream& out) {
        std::vector<FamilySpec> specs = {{Family::DualPolarC, 2, 2},
                                         {Family::DualPolarC, 3, 2},
                                         {Family::DualPolarB, 2, 3}};
        for (const auto& spec : specs) {
            Instance inst = load(spec);
            for (int i = 0; i <= inst.ctx.D(); ++i) {
                Subspace proj = estar_nucleus(inst.ctx, inst.nd, i, EstarMethod::Projection);
                expect(out,
                       proj == estar_nucleus(inst.ctx, inst.nd, i, EstarMethod::LocalSpectral),
                       "local_spectral at i=" + std::to_string(i));
                expect(out, proj == estar_nucleus(inst.ctx, inst.nd, i, EstarMethod::Components),
                       "components at i=" + std::to_string(i));
            }
        }
    });

    criterion("6 Pmain matrix identity", 90.0, [](std::ostringstream& out) {
        std::vector<FamilySpec> specs = {{Family::DualPolarC, 2, 2},
                                         {Family::DualPolarC, 3, 2},
                                         {Family::DualPolarB, 2, 3}};
        for (const auto& spec : specs) {
            Instance inst = load(spec);
            EquivClasses cls = sim_classes(inst.ctx);
            PosetP poset = build_poset(inst.ctx, cls);
            CheckList checks = pmain_operator(inst.ctx, poset);
            expect_checks(out, checks, family_name(spec.family) + std::to_string(spec.D));
        }
    });

    criterion("7 bijection P -> class vectors", 90.0, [](std::ostringstream& out) {
        std::vector<FamilySpec> specs = {{Family::DualPolarC, 2, 2},
                                         {Family::DualPolarC, 3, 2},
                                         {Family::DualPolarB, 2, 3}};
        for (const auto& spec : specs) {
            Instance inst = load(spec);
            EquivClasses cls = sim_classes(inst.ctx);
            PosetP poset = build_poset(inst.ctx, cls);
            expect(out, static_cast<int>(poset.elements.size()) == inst.nd.N.dim(),
                   "|P| = dim N");
            bool bij = false;
            for (const auto& r : poset.cert.results())
                if (r.name == "bij" && r.status == CheckStatus::Pass) bij = true;
            expect(out, bij, "eta -> eta^N bijection");
        }
    });

    criterion("8 td-system suite", 120.0, [](std::ostringstream& out) {
        std::vector<FamilySpec> specs = {{Family::DualPolarC, 2, 2}, {Family::DualPolarC, 3, 2},
                                         {Family::DualPolarB, 2, 3}, {Family::Hypercube, 3},
                                         {Family::Hamming, 2, 2, 3}, {Family::Odd, 3}};
        for (const auto& spec : specs) {
            Instance inst = load(spec);
            for (std::size_t m = 0; m < inst.nd.modules.size(); ++m) {
                TDSystemReport rep = verify_td_system(inst.ctx, inst.nd.modules[m]);
                expect_checks(out, rep.checks,
                              family_name(spec.family) + ".module" + std::to_string(m));
                expect(out, rep.leonard, "Leonard flag");
            }
        }
    });

    criterion("9 equitable-partition constants", 60.0, [](std::ostringstream& out) {
        for (int D : {2, 3}) {
            Instance inst = load({Family::DualPolarC, D, 2});
            EquivClasses cls = sim_classes(inst.ctx);
            PosetP poset = build_poset(inst.ctx, cls);
            CheckList checks = pmain_operator(inst.ctx, poset);
            for (const auto& r : checks.results()) {
                if (r.name.rfind("equit", 0) != 0) continue;
                expect(out, r.status == CheckStatus::Pass, "C_" + std::to_string(D) + "(2) " + r.name);
            }
        }
    });

    criterion("10 property suites", 60.0, [](std::ostringstream& out) {
        std::mt19937 rng(424242);
        std::uniform_int_distribution<int> num(-5, 5), den(1, 3), dim(1, 5);
        for (int trial = 0; trial < 100; ++trial) {
            int rows = dim(rng), cols = dim(rng);
            RatMatrix m(rows, cols);
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j) m.at(i, j) = make_rational(num(rng), den(rng));
            expect(out, kernel(m).dim() + rref(m).rank == cols, "rank-nullity");
            int ambient = 2 + trial % 4;
            auto rand_space = [&] {
                std::vector<std::vector<Rational>> gens;
                for (int g = 0; g < 2; ++g) {
                    std::vector<Rational> v(ambient);
                    for (auto& e : v) e = make_rational(num(rng), den(rng));
                    gens.push_back(std::move(v));
                }
                return Subspace::span(ambient, gens);
            };
            Subspace u = rand_space(), w = rand_space();
            expect(out, sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim(),
                   "modular dimension law");
        }
        for (unsigned q : {2u, 3u, 4u}) {
            unsigned p, n;
            factor_prime_power(q, p, n);
            auto F = FieldSpec::make(p, n);
            for (int d = 1; d <= 4; ++d)
                for (int k = 0; k <= d; ++k)
                    expect(out,
                           Integer(static_cast<long>(
                               enumerate_subspaces(FFSubspace::full(F, d), k).size())) ==
                               q_binomial(d, k, q),
                           "Gaussian binomial count");
        }
        Instance inst = load({Family::DualPolarC, 2, 2});
        int nn = inst.g.num_vertices();
        RatMatrix esum(nn, nn);
        for (const auto& e : inst.sd.E) esum = esum + e;
        expect(out, esum == RatMatrix::identity(nn), "sum E_i = I");
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) {
                RatMatrix prod = inst.sd.E[i] * inst.sd.E[j];
                expect(out, i == j ? prod == inst.sd.E[i] : prod.is_zero(), "E_i E_j = delta E_i");
            }
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j)
                for (int y = 0; y < nn; ++y) {
                    Rational lhs = inst.ctx.astar_diag[i][y] * inst.ctx.astar_diag[j][y];
                    Rational rhs = 0;
                    for (int h = 0; h <= 2; ++h)
                        rhs += inst.sd.krein[h][i][j] * inst.ctx.astar_diag[h][y];
                    if (lhs != rhs) {
                        out << "A*_i A*_j Krein expansion; ";
                        y = nn;
                        j = 3;
                        i = 3;
                    }
                }
    });

    criterion("11 negative controls", 10.0, [](std::ostringstream& out) {
        Graph p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
        DRCheck dr = check_distance_regular(p3, distance_data(p3));
        expect(out, !dr.distance_regular, "P_3 must fail");
        expect(out, dr.witness.has_value(), "P_3 witness");

        RunConfig config;
        config.family = FamilySpec{Family::DualPolarD, 2, 2};
        RunResult res = run_verify(config);
        expect(out, res.exit_code == 0, "D_2(2) verify exit");
        int skips = 0;
        for (const auto& c : res.output.at("checks"))
            if (c.at("status") == "skip") ++skips;
        expect(out, skips >= 10, "D_2(2) nonbipartite-only checks skipped");
        std::string dump = res.output.dump();
        expect(out, dump.find("q-binomial") == std::string::npos || skips > 0,
               "no q-binomial assertions for bipartite input");
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
