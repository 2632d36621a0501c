#include "nucleuslab/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nlab {

std::string family_name(Family f) {
    switch (f) {
        case Family::Hypercube: return "hypercube";
        case Family::Hamming: return "hamming";
        case Family::Odd: return "odd";
        case Family::DualPolarB: return "B";
        case Family::DualPolarC: return "C";
        case Family::DualPolarD: return "D";
        case Family::DualPolar2AEven: return "2A-even";
        case Family::DualPolar2AOdd: return "2A-odd";
        case Family::Imported: return "imported";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (Family f : {Family::Hypercube, Family::Hamming, Family::Odd, Family::DualPolarB,
                     Family::DualPolarC, Family::DualPolarD, Family::DualPolar2AEven,
                     Family::DualPolar2AOdd, Family::Imported})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

bool family_is_dual_polar(Family f) {
    return f == Family::DualPolarB || f == Family::DualPolarC || f == Family::DualPolarD ||
           f == Family::DualPolar2AEven || f == Family::DualPolar2AOdd;
}

Rational DualPolarInfo::q_half_power(int twice_exponent) const {
    // q = p^m with m = extension degree of the field actually in use.
    // q^(t/2) = p^(m t / 2); m t must be even.
    unsigned p = field->p();
    unsigned m = field->n();
    long e = static_cast<long>(m) * twice_exponent;
    if (e % 2 != 0) throw std::logic_error("non-integral power of p requested");
    e /= 2;
    Integer num = int_pow(Integer(p), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(num);
    return make_rational(1, num);
}

bool Graph::adjacent(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

RatMatrix Graph::adjacency_matrix() const {
    RatMatrix m(num_vertices(), num_vertices());
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj[u]) m.at(u, v) = 1;
    return m;
}

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

std::string ff_label(const FFSubspace& s) {
    std::ostringstream os;
    for (int r = 0; r < s.dim(); ++r) {
        if (r) os << "|";
        for (int c = 0; c < s.ambient(); ++c) {
            if (c) os << ",";
            os << s.basis()[r][c];
        }
    }
    return os.str();
}

Graph build_hypercube(const FamilySpec& spec) {
    if (spec.D < 1) throw std::invalid_argument("hypercube needs D >= 1");
    if (spec.D > 20) throw std::invalid_argument("hypercube D too large");
    int n = 1 << spec.D;
    Graph g;
    g.spec = spec;
    g.adj.resize(n);
    g.labels.resize(n);
    for (int v = 0; v < n; ++v) {
        std::string bits(spec.D, '0');
        for (int b = 0; b < spec.D; ++b)
            if (v & (1 << (spec.D - 1 - b))) bits[b] = '1';
        g.labels[v] = bits;
        for (int b = 0; b < spec.D; ++b) g.adj[v].push_back(v ^ (1 << b));
        std::sort(g.adj[v].begin(), g.adj[v].end());
    }
    return g;
}

Graph build_hamming(const FamilySpec& spec) {
    if (spec.D < 1 || spec.N < 2) throw std::invalid_argument("hamming needs D >= 1, N >= 2");
    long n = 1;
    for (int i = 0; i < spec.D; ++i) {
        n *= spec.N;
        if (n > 2000000) throw std::invalid_argument("hamming instance too large");
    }
    Graph g;
    g.spec = spec;
    g.adj.resize(n);
    g.labels.resize(n);
    // Vertex index encodes the tuple in big-endian base N; index order is the
    // lexicographic order on tuples.
    for (long v = 0; v < n; ++v) {
        std::vector<int> tuple(spec.D);
        long rest = v;
        for (int i = spec.D - 1; i >= 0; --i) {
            tuple[i] = static_cast<int>(rest % spec.N);
            rest /= spec.N;
        }
        g.labels[v] = join_ints(tuple, ",");
        long place = 1;
        for (int i = spec.D - 1; i >= 0; --i) {
            for (int c = 0; c < spec.N; ++c) {
                if (c == tuple[i]) continue;
                g.adj[v].push_back(static_cast<int>(v + (c - tuple[i]) * place));
            }
            place *= spec.N;
        }
        std::sort(g.adj[v].begin(), g.adj[v].end());
    }
    return g;
}

Graph build_odd(const FamilySpec& spec) {
    // Odd graph O_{D+1}: vertices are the D-subsets of a (2D+1)-set,
    // adjacent when disjoint.
    if (spec.D < 1 || spec.D > 12) throw std::invalid_argument("odd graph needs 1 <= D <= 12");
    int ground = 2 * spec.D + 1;
    std::vector<std::vector<int>> sets;
    std::vector<int> cur(spec.D);
    for (int i = 0; i < spec.D; ++i) cur[i] = i;
    while (true) {
        sets.push_back(cur);
        int i = spec.D - 1;
        while (i >= 0 && cur[i] == ground - spec.D + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < spec.D; ++j) cur[j] = cur[j - 1] + 1;
    }
    int n = static_cast<int>(sets.size());
    Graph g;
    g.spec = spec;
    g.adj.resize(n);
    g.labels.resize(n);
    auto mask = [&](const std::vector<int>& s) {
        unsigned m = 0;
        for (int e : s) m |= 1u << e;
        return m;
    };
    std::vector<unsigned> masks(n);
    for (int v = 0; v < n; ++v) {
        masks[v] = mask(sets[v]);
        g.labels[v] = join_ints(sets[v], ",");
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((masks[u] & masks[v]) == 0) {
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
            }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    return g;
}

Graph build_dual_polar(const FamilySpec& spec) {
    if (spec.D < 1) throw std::invalid_argument("dual polar graph needs D >= 1");
    unsigned p = 0, n = 0;
    if (!factor_prime_power(spec.q, p, n))
        throw std::invalid_argument("q is not a prime power");

    bool twisted = spec.family == Family::DualPolar2AEven || spec.family == Family::DualPolar2AOdd;
    unsigned ext_degree = twisted ? 2 * n : n;
    FieldPtr field = FieldSpec::make(p, ext_degree);

    FormKind kind;
    int ambient;
    int e_times_2;
    switch (spec.family) {
        case Family::DualPolarB:
            kind = FormKind::QuadraticOdd;
            ambient = 2 * spec.D + 1;
            e_times_2 = 0;
            break;
        case Family::DualPolarC:
            kind = FormKind::Symplectic;
            ambient = 2 * spec.D;
            e_times_2 = 0;
            break;
        case Family::DualPolarD:
            kind = FormKind::QuadraticHyperbolic;
            ambient = 2 * spec.D;
            e_times_2 = -2;
            break;
        case Family::DualPolar2AEven:
            kind = FormKind::Hermitean;
            ambient = 2 * spec.D + 1;
            e_times_2 = 1;
            break;
        case Family::DualPolar2AOdd:
            kind = FormKind::Hermitean;
            ambient = 2 * spec.D;
            e_times_2 = -1;
            break;
        default: throw std::invalid_argument("not a dual polar family");
    }

    DualPolarInfo info;
    info.field = field;
    info.form = std::make_shared<FormSpec>(field, kind, ambient);
    info.e_times_2 = e_times_2;
    info.q = int_pow(Integer(p), ext_degree);
    {
        Rational a1p1 = info.q_half_power(2 + e_times_2);  // q^(e+1)
        if (!is_integer(a1p1)) throw std::logic_error("a1 is not an integer");
        info.a1 = a1p1.get_num() - 1;
    }
    // Preflight the vertex count from the valency formula before enumerating.
    {
        Integer predicted = 0;
        for (int i = 0; i <= spec.D; ++i)
            predicted += int_pow(info.a1 + 1, i) *
                         int_pow(info.q, static_cast<unsigned long>(i) * (i - 1) / 2) *
                         q_binomial(spec.D, i, info.q);
        if (predicted > 20000)
            throw std::invalid_argument("dual polar instance would have " + predicted.get_str() +
                                        " vertices; parameters out of the supported range");
    }
    info.vertices = max_isotropic_enumerate(*info.form, spec.D);
    if (info.vertices.empty()) throw std::invalid_argument("form admits no isotropic D-spaces");

    Graph g;
    g.spec = spec;
    int count = static_cast<int>(info.vertices.size());
    g.adj.resize(count);
    g.labels.resize(count);
    for (int v = 0; v < count; ++v) g.labels[v] = ff_label(info.vertices[v]);
    // Adjacent iff dim(y intersect z) = D - 1, via rank of the stacked bases.
    for (int u = 0; u < count; ++u) {
        for (int v = u + 1; v < count; ++v) {
            FFSubspace s = ff_sum(info.vertices[u], info.vertices[v]);
            int meet = 2 * spec.D - s.dim();
            if (meet == spec.D - 1) {
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
            }
        }
    }
    for (auto& row : g.adj) std::sort(row.begin(), row.end());
    g.dual_polar = std::move(info);
    return g;
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Hypercube: return build_hypercube(spec);
        case Family::Hamming: return build_hamming(spec);
        case Family::Odd: return build_odd(spec);
        case Family::DualPolarB:
        case Family::DualPolarC:
        case Family::DualPolarD:
        case Family::DualPolar2AEven:
        case Family::DualPolar2AOdd: return build_dual_polar(spec);
        case Family::Imported: break;
    }
    throw std::invalid_argument("unsupported family");
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                       std::vector<std::string> labels) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    Graph g;
    g.spec.family = Family::Imported;
    g.adj.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge index out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& row : g.adj) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    if (labels.empty())
        for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    if (static_cast<int>(labels.size()) != n) throw std::invalid_argument("label count mismatch");
    g.labels = std::move(labels);
    return g;
}

DistanceData distance_data(const Graph& g) {
    int n = g.num_vertices();
    DistanceData dd;
    dd.dist.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        auto& dist = dd.dist[s];
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.adj[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] < 0) throw std::invalid_argument("graph is disconnected");
            dd.D = std::max(dd.D, dist[v]);
        }
    }
    dd.A.reserve(dd.D + 1);
    for (int i = 0; i <= dd.D; ++i) dd.A.emplace_back(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) dd.A[dd.dist[u][v]].at(u, v) = 1;
    return dd;
}

std::string DRWitness::describe() const {
    std::ostringstream os;
    os << "|G_" << i << "(x=" << x << ") n G_" << j << "(y=" << y << ")| = " << got
       << " but earlier pairs at distance " << h << " gave " << expected;
    return os.str();
}

DRCheck check_distance_regular(const Graph& g, const DistanceData& dd) {
    int n = g.num_vertices();
    int D = dd.D;
    DRCheck out;
    out.p.assign(D + 1, std::vector<std::vector<long>>(D + 1, std::vector<long>(D + 1, -1)));
    std::vector<std::vector<long>> counts(D + 1, std::vector<long>(D + 1, 0));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int h = dd.dist[x][y];
            for (auto& row : counts) std::fill(row.begin(), row.end(), 0);
            for (int z = 0; z < n; ++z) ++counts[dd.dist[x][z]][dd.dist[z][y]];
            for (int i = 0; i <= D; ++i)
                for (int j = 0; j <= D; ++j) {
                    long& ref = out.p[h][i][j];
                    if (ref < 0)
                        ref = counts[i][j];
                    else if (ref != counts[i][j]) {
                        out.witness = DRWitness{x, y, h, i, j, ref, counts[i][j]};
                        return out;
                    }
                }
        }
    }
    out.distance_regular = true;

    out.triangle_pattern_ok = true;
    for (int h = 0; h <= D && out.triangle_pattern_ok; ++h)
        for (int i = 0; i <= D && out.triangle_pattern_ok; ++i)
            for (int j = 0; j <= D; ++j) {
                long v = out.p[h][i][j];
                bool too_far = h > i + j || i > h + j || j > h + i;
                bool tight = h == i + j || i == h + j || j == h + i;
                if (too_far && v != 0) {
                    out.triangle_pattern_ok = false;
                    std::ostringstream os;
                    os << "p[" << h << "][" << i << "][" << j << "] = " << v << " expected 0";
                    out.triangle_pattern_failure = os.str();
                    break;
                }
                if (tight && !too_far && v == 0) {
                    out.triangle_pattern_ok = false;
                    std::ostringstream os;
                    os << "p[" << h << "][" << i << "][" << j << "] = 0 expected nonzero";
                    out.triangle_pattern_failure = os.str();
                    break;
                }
            }

    out.c.assign(D + 1, 0);
    out.a.assign(D + 1, 0);
    out.b.assign(D + 1, 0);
    out.k.assign(D + 1, 0);
    for (int i = 0; i <= D; ++i) {
        out.k[i] = out.p[0][i][i];
        if (i >= 1) out.c[i] = out.p[i][1][i - 1];
        out.a[i] = out.p[i][1][i];
        if (i < D) out.b[i] = out.p[i][1][i + 1];
    }
    return out;
}

DualPolarReport verify_dual_polar_parameters(const Graph& g, const DRCheck& dr) {
    if (!g.is_dual_polar()) throw std::invalid_argument("not a dual polar graph");
    if (!dr.distance_regular) throw std::invalid_argument("graph failed distance regularity");
    const DualPolarInfo& dp = *g.dual_polar;
    const Integer& q = dp.q;
    const Integer& a1 = dp.a1;
    int D = g.spec.D;
    DualPolarReport report;
    auto check = [&](const std::string& array, int i, const Integer& expected, long got) {
        if (expected != got) {
            report.ok = false;
            report.mismatches.push_back(
                {array, i, expected.get_str(), std::to_string(got)});
        }
    };
    for (int i = 0; i <= D; ++i) {
        check("c", i, q_int(i, q), dr.c[i]);
        check("a", i, a1 * q_int(i, q), dr.a[i]);
        Integer bi = (i < D) ? (a1 + 1) * ((int_pow(q, D) - int_pow(q, i)) / (q - 1)) : Integer(0);
        check("b", i, bi, dr.b[i]);
        Integer ki = int_pow(a1 + 1, i) * int_pow(q, static_cast<unsigned long>(i) * (i - 1) / 2) *
                     q_binomial(D, i, q);
        check("k", i, ki, dr.k[i]);
    }
    return report;
}

}  // namespace nlab
