#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace nlab {

/// Finite field GF(p^n) in the polynomial-residue presentation.
/// Elements are integers in [0, q) encoding coefficient vectors base p:
/// sum c_i w^i  <->  sum c_i p^i, where w is the residue of x mod the modulus.
/// Arithmetic goes through exp/log tables for a fixed primitive element.
class FieldSpec {
public:
    static std::shared_ptr<const FieldSpec> make(unsigned p, unsigned n);

    unsigned p() const { return p_; }
    unsigned n() const { return n_; }
    unsigned q() const { return q_; }

    /// Monic modulus coefficients c_0..c_n (c_n = 1); equals x for n = 1.
    const std::vector<unsigned>& modulus() const { return modulus_; }
    std::string modulus_string() const;

    unsigned add(unsigned a, unsigned b) const;
    unsigned neg(unsigned a) const;
    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inv(unsigned a) const;
    unsigned pow(unsigned a, unsigned long e) const;

    /// The involution x -> x^(p^(n/2)); requires n even.
    unsigned conj(unsigned a) const;
    bool has_conj() const { return n_ % 2 == 0; }

    unsigned generator() const { return generator_; }

private:
    FieldSpec() = default;

    unsigned p_ = 0, n_ = 0, q_ = 0;
    std::vector<unsigned> modulus_;
    unsigned generator_ = 0;
    std::vector<unsigned> exp_;  // size 2(q-1)
    std::vector<unsigned> log_;  // size q, log_[0] unused
};

using FieldPtr = std::shared_ptr<const FieldSpec>;

bool is_prime(unsigned p);

/// Factor a prime power q = p^n; returns false if q is not a prime power.
bool factor_prime_power(unsigned long q, unsigned& p, unsigned& n);

}  // namespace nlab
