#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nucleuslab/forms.hpp"
#include "nucleuslab/rational.hpp"

using namespace nlab;

namespace {

// Oracle: enumerate k-subspaces by spanning every k-tuple of vectors and
// deduplicating. Exponential; tiny cases only.
std::set<std::vector<unsigned>> subspace_oracle(const FieldPtr& F, int ambient, int k) {
    std::set<std::vector<unsigned>> out;
    long long total = 1;
    for (int i = 0; i < ambient; ++i) total *= F->q();
    std::vector<FFVector> vectors;
    for (long long code = 0; code < total; ++code) {
        FFVector v(ambient);
        long long rest = code;
        for (int i = 0; i < ambient; ++i) {
            v[i] = static_cast<unsigned>(rest % F->q());
            rest /= F->q();
        }
        vectors.push_back(v);
    }
    std::vector<int> pick(k, 0);
    while (true) {
        std::vector<FFVector> gens;
        for (int idx : pick) gens.push_back(vectors[idx]);
        FFSubspace s = FFSubspace::span(F, ambient, gens);
        if (s.dim() == k) out.insert(s.encode());
        int i = k - 1;
        while (i >= 0 && pick[i] == total - 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = 0;
    }
    if (k == 0) out.insert({});
    return out;
}

}  // namespace

TEST_CASE("field construction") {
    auto f2 = FieldSpec::make(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->modulus_string() == "x");

    auto f3 = FieldSpec::make(3, 1);
    CHECK(f3->q() == 3);

    auto f4 = FieldSpec::make(2, 2);
    CHECK(f4->q() == 4);
    CHECK(f4->modulus() == std::vector<unsigned>{1, 1, 1});  // x^2 + x + 1
    CHECK(f4->modulus_string() == "x^2+x+1");

    CHECK_THROWS(FieldSpec::make(6, 1));
    CHECK_THROWS(FieldSpec::make(4, 1));
}

TEST_CASE("field arithmetic") {
    auto f2 = FieldSpec::make(2, 1);
    CHECK(f2->add(1, 1) == 0);

    auto f4 = FieldSpec::make(2, 2);
    // w encodes as 2; w^2 = w + 1 encodes as 3 under x^2+x+1.
    CHECK(f4->mul(2, 2) == 3);
    CHECK(f4->conj(2) == 3);
    CHECK(f4->conj(f4->conj(2)) == 2);
    CHECK_THROWS(f4->inv(0));

    auto f9 = FieldSpec::make(3, 2);
    for (unsigned a = 1; a < 9; ++a) CHECK(f9->mul(a, f9->inv(a)) == 1);
    // Frobenius fixes exactly the prime subfield GF(3) = {0, 1, 2}.
    int fixed = 0;
    for (unsigned a = 0; a < 9; ++a)
        if (f9->conj(a) == a) ++fixed;
    CHECK(fixed == 3);
    for (unsigned a = 0; a < 9; ++a)
        for (unsigned b = 0; b < 9; ++b) {
            CHECK(f9->conj(f9->add(a, b)) == f9->add(f9->conj(a), f9->conj(b)));
            CHECK(f9->conj(f9->mul(a, b)) == f9->mul(f9->conj(a), f9->conj(b)));
        }
}

TEST_CASE("prime power factoring") {
    unsigned p, n;
    CHECK(factor_prime_power(8, p, n));
    CHECK(p == 2);
    CHECK(n == 3);
    CHECK(factor_prime_power(9, p, n));
    CHECK(p == 3);
    CHECK_FALSE(factor_prime_power(6, p, n));
    CHECK_FALSE(factor_prime_power(12, p, n));
}

TEST_CASE("canonical spans over GF(2)") {
    auto f2 = FieldSpec::make(2, 1);
    FFSubspace s = FFSubspace::span(f2, 2, {{1, 0}, {1, 1}});
    CHECK(s.dim() == 2);
    CHECK(s.basis() == std::vector<FFVector>{{1, 0}, {0, 1}});

    CHECK(FFSubspace::span(f2, 3, {}).dim() == 0);

    FFSubspace t = FFSubspace::span(f2, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(t.dim() == 2);
}

TEST_CASE("subspace enumeration counts match Gaussian binomials") {
    for (unsigned q : {2u, 3u, 4u}) {
        unsigned p, n;
        REQUIRE(factor_prime_power(q, p, n));
        auto F = FieldSpec::make(p, n);
        for (int dim = 1; dim <= 4; ++dim) {
            FFSubspace full = FFSubspace::full(F, dim);
            for (int k = 0; k <= dim; ++k) {
                auto subs = enumerate_subspaces(full, k);
                CHECK(Integer(static_cast<long>(subs.size())) == q_binomial(dim, k, q));
                CHECK(std::is_sorted(subs.begin(), subs.end()));
                std::set<std::vector<unsigned>> dedup;
                for (const auto& s : subs) dedup.insert(s.encode());
                CHECK(dedup.size() == subs.size());
            }
        }
    }
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
    auto f2 = FieldSpec::make(2, 1);
    auto oracle = subspace_oracle(f2, 3, 1);
    CHECK(oracle.size() == 7);
    auto got = enumerate_subspaces(FFSubspace::full(f2, 3), 1);
    std::set<std::vector<unsigned>> keys;
    for (const auto& s : got) keys.insert(s.encode());
    CHECK(keys == oracle);

    auto f3 = FieldSpec::make(3, 1);
    CHECK(enumerate_subspaces(FFSubspace::full(f3, 4), 2).size() ==
          subspace_oracle(f3, 4, 2).size());
}

TEST_CASE("property: canonicality under generator shuffles") {
    std::mt19937 rng(77);
    auto f4 = FieldSpec::make(2, 2);
    for (int trial = 0; trial < 120; ++trial) {
        int ambient = 2 + trial % 4;
        std::vector<FFVector> gens;
        std::uniform_int_distribution<unsigned> el(0, 3);
        for (int i = 0; i < 3; ++i) {
            FFVector v(ambient);
            for (auto& c : v) c = el(rng);
            gens.push_back(v);
        }
        FFSubspace s1 = FFSubspace::span(f4, ambient, gens);
        std::shuffle(gens.begin(), gens.end(), rng);
        FFSubspace s2 = FFSubspace::span(f4, ambient, gens);
        CHECK(s1 == s2);
    }
}

TEST_CASE("standard form values") {
    auto f2 = FieldSpec::make(2, 1);
    FormSpec symp(f2, FormKind::Symplectic, 4);
    FFVector e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0};
    CHECK(symp.bilinear(e1, e2) == 1);
    CHECK(symp.bilinear(e1, e3) == 0);

    FormSpec hyp(f2, FormKind::QuadraticHyperbolic, 4);
    CHECK(hyp.quadratic(e1) == 0);
    FFVector e12{1, 1, 0, 0};
    CHECK(hyp.quadratic(e12) == 1);

    auto f4 = FieldSpec::make(2, 2);
    FormSpec herm(f4, FormKind::Hermitean, 3);
    CHECK(herm.bilinear({1, 0, 0}, {1, 0, 0}) == 1);
    CHECK(herm.bilinear({2, 0, 0}, {2, 0, 0}) == f4->mul(2, f4->conj(2)));
}

TEST_CASE("total isotropy") {
    auto f2 = FieldSpec::make(2, 1);
    FormSpec symp(f2, FormKind::Symplectic, 4);
    CHECK(is_totally_isotropic(symp, FFSubspace::span(f2, 4, {})));
    CHECK(is_totally_isotropic(symp, FFSubspace::span(f2, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}})));
    CHECK_FALSE(is_totally_isotropic(symp, FFSubspace::span(f2, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})));

    FormSpec hyp(f2, FormKind::QuadraticHyperbolic, 4);
    CHECK(is_totally_isotropic(hyp, FFSubspace::span(f2, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}})));
}

TEST_CASE("maximal isotropic enumeration") {
    auto f2 = FieldSpec::make(2, 1);

    FormSpec c22(f2, FormKind::Symplectic, 4);
    auto verts = max_isotropic_enumerate(c22, 2);
    CHECK(verts.size() == 15);
    for (const auto& v : verts) {
        CHECK(v.dim() == 2);
        CHECK(is_totally_isotropic(c22, v));
    }
    // Cross-check against the brute-force filter.
    auto brute = max_isotropic_brute_force(c22, 2);
    CHECK(brute.size() == 15);
    CHECK(std::equal(verts.begin(), verts.end(), brute.begin()));

    FormSpec c32(f2, FormKind::Symplectic, 6);
    CHECK(max_isotropic_enumerate(c32, 3).size() == 135);

    FormSpec d22(f2, FormKind::QuadraticHyperbolic, 4);
    auto dverts = max_isotropic_enumerate(d22, 2);
    CHECK(dverts.size() == 6);
    CHECK(std::equal(dverts.begin(), dverts.end(), max_isotropic_brute_force(d22, 2).begin()));

    auto f3 = FieldSpec::make(3, 1);
    FormSpec b23(f3, FormKind::QuadraticOdd, 5);
    CHECK(max_isotropic_enumerate(b23, 2).size() == 40);
}
