#include "nucleuslab/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace nlab {

namespace {

// Dense polynomial arithmetic over GF(p), coefficients little-endian, used only
// to build the field tables.
using Poly = std::vector<unsigned>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return trim(c);
}

unsigned mod_inv(unsigned a, unsigned p) {
    // p is a small prime.
    unsigned r = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    a = trim(std::move(a));
    unsigned lead_inv = mod_inv(m.back(), p);
    while (a.size() >= m.size()) {
        unsigned f = a.back() * lead_inv % p;
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[shift + i] = (a[shift + i] + p * m[i] - f * m[i] % p) % p;
        a = trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

bool poly_divides(const Poly& d, const Poly& a, unsigned p) {
    return poly_mod(a, d, p).empty();
}

unsigned encode(const Poly& a, unsigned p) {
    unsigned v = 0, mult = 1;
    for (unsigned c : a) {
        v += c * mult;
        mult *= p;
    }
    return v;
}

Poly decode(unsigned v, unsigned p) {
    Poly a;
    while (v) {
        a.push_back(v % p);
        v /= p;
    }
    return a;
}

bool is_irreducible(const Poly& m, unsigned p) {
    unsigned deg = static_cast<unsigned>(m.size()) - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        unsigned long count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned long low = 0; low < count; ++low) {
            Poly cand = decode(static_cast<unsigned>(low), p);
            cand.resize(d + 1, 0);
            cand[d] = 1;
            if (poly_divides(cand, m, p)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool factor_prime_power(unsigned long q, unsigned& p, unsigned& n) {
    if (q < 2) return false;
    for (unsigned d = 2; static_cast<unsigned long>(d) * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            n = 0;
            while (q > 1) {
                if (q % d != 0) return false;
                q /= d;
                ++n;
            }
            return true;
        }
    }
    p = static_cast<unsigned>(q);
    n = 1;
    return true;
}

std::shared_ptr<const FieldSpec> FieldSpec::make(unsigned p, unsigned n) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (n < 1) throw std::invalid_argument("extension degree must be >= 1");

    auto field = std::shared_ptr<FieldSpec>(new FieldSpec());
    field->p_ = p;
    field->n_ = n;
    unsigned long q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;
        if (q > (1u << 16)) throw std::invalid_argument("field too large (q must be <= 2^16)");
    }
    field->q_ = static_cast<unsigned>(q);

    // Lexicographically smallest monic irreducible modulus, scanning the
    // low-coefficient encoding upward. Degree 1 lands on x itself.
    Poly modulus;
    for (unsigned low = 0;; ++low) {
        if (low >= field->q_) throw std::logic_error("no irreducible modulus found");
        Poly cand = decode(low, p);
        cand.resize(n + 1, 0);
        cand[n] = 1;
        if (is_irreducible(cand, p)) {
            modulus = cand;
            break;
        }
    }
    field->modulus_ = modulus;

    // Locate a primitive element and fill the exp/log tables.
    unsigned qm1 = field->q_ - 1;
    auto mul_raw = [&](unsigned a, unsigned b) {
        return encode(poly_mod(poly_mul(decode(a, p), decode(b, p), p), modulus, p), p);
    };
    for (unsigned g = 1; g < field->q_; ++g) {
        unsigned acc = 1, order = 0;
        do {
            acc = mul_raw(acc, g);
            ++order;
        } while (acc != 1 && order <= qm1);
        if (order == qm1) {
            field->generator_ = g;
            break;
        }
    }
    if (field->generator_ == 0) throw std::logic_error("no generator found");

    field->exp_.assign(2 * qm1, 1);
    field->log_.assign(field->q_, 0);
    unsigned acc = 1;
    for (unsigned i = 0; i < qm1; ++i) {
        field->exp_[i] = acc;
        field->log_[acc] = i;
        acc = mul_raw(acc, field->generator_);
    }
    for (unsigned i = 0; i < qm1; ++i) field->exp_[qm1 + i] = field->exp_[i];
    return field;
}

std::string FieldSpec::modulus_string() const {
    std::string s;
    for (int i = static_cast<int>(n_); i >= 0; --i) {
        unsigned c = modulus_[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0)
            s += std::to_string(c);
        else {
            if (c != 1) s += std::to_string(c) + "*";
            s += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

unsigned FieldSpec::add(unsigned a, unsigned b) const {
    unsigned out = 0, mult = 1;
    while (a || b) {
        unsigned da = a % p_, db = b % p_;
        out += ((da + db) % p_) * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

unsigned FieldSpec::neg(unsigned a) const {
    unsigned out = 0, mult = 1;
    while (a) {
        unsigned d = a % p_;
        out += (d ? p_ - d : 0) * mult;
        mult *= p_;
        a /= p_;
    }
    return out;
}

unsigned FieldSpec::mul(unsigned a, unsigned b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

unsigned FieldSpec::inv(unsigned a) const {
    if (a == 0) throw std::domain_error("inversion of zero field element");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

unsigned FieldSpec::pow(unsigned a, unsigned long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    unsigned long idx = (static_cast<unsigned long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[idx];
}

unsigned FieldSpec::conj(unsigned a) const {
    if (!has_conj()) throw std::domain_error("conj requires an even extension degree");
    unsigned long e = 1;
    for (unsigned i = 0; i < n_ / 2; ++i) e *= p_;
    return pow(a, e);
}

}  // namespace nlab
