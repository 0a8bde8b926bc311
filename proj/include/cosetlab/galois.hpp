#ifndef COSETLAB_GALOIS_HPP
#define COSETLAB_GALOIS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "cosetlab/common.hpp"

namespace cosetlab {

// Largest supported field size; everything here is meant for small fields
// where exhaustive checks stay cheap.
inline constexpr unsigned kMaxFieldSize = 256;

// GF(p^m) description: characteristic p, extension degree m, and for m > 1 a
// monic irreducible modulus f of degree m with ascending coefficients
// f[0] + f[1] x + ... + f[m] x^m over GF(p).  For m = 1 the modulus is unused.
struct FieldParams {
    unsigned p = 2;
    unsigned m = 1;
    std::vector<unsigned> poly;
};

// Element of GF(p^m) as its p-adic coordinate tuple (a_1, ..., a_m), meaning
// a_1 + a_2 b + ... + a_m b^(m-1) for the residue b of x mod f.
class FieldElement {
  public:
    FieldElement() = default;

    unsigned degree() const { return m_; }
    unsigned digit(unsigned j) const { return d_[j]; }  // j in [0, m)
    bool is_zero() const {
        for (unsigned j = 0; j < m_; ++j)
            if (d_[j] != 0) return false;
        return true;
    }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        if (a.m_ != b.m_) return false;
        for (unsigned j = 0; j < a.m_; ++j)
            if (a.d_[j] != b.d_[j]) return false;
        return true;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  private:
    friend class Field;
    unsigned m_ = 0;
    std::array<std::uint8_t, 8> d_{};  // p^m <= 256 implies m <= 8
};

// Arithmetic of GF(p^m).  Validates p prime and f monic irreducible on
// construction; all element operations check that operands carry the right
// degree.  Multiplication reduces mod f directly; inverses are found by
// exhaustive search, which is exact and fast at these sizes.
class Field {
  public:
    explicit Field(FieldParams params);

    const FieldParams& params() const { return params_; }
    unsigned p() const { return params_.p; }
    unsigned m() const { return params_.m; }
    unsigned size() const { return q_; }  // q = p^m

    FieldElement zero() const { return element(0); }
    FieldElement one() const { return element(1); }

    // Elements indexed 0..q-1 by their packed coordinates, a_1 least significant.
    FieldElement element(unsigned index) const;
    unsigned index(const FieldElement& a) const;

    FieldElement from_coords(const std::vector<unsigned>& coords) const;
    std::vector<unsigned> coords(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;  // throws std::domain_error on zero

    friend bool operator==(const Field& a, const Field& b) {
        return a.params_.p == b.params_.p && a.params_.m == b.params_.m &&
               a.params_.poly == b.params_.poly;
    }

  private:
    void check_element(const FieldElement& a) const;

    FieldParams params_;
    unsigned q_ = 0;
};

bool is_prime(unsigned n);

// Polynomial irreducibility over GF(p): poly ascending, degree >= 1.
bool is_irreducible(unsigned p, const std::vector<unsigned>& poly);

// Smallest monic irreducible of degree m over GF(p) in ascending coefficient
// order (constant term varies fastest).  Matches the usual small-field picks,
// e.g. x^2+x+1 for GF(4) and x^2+1 for GF(9).
std::vector<unsigned> default_irreducible(unsigned p, unsigned m);

// Exhaustive axiom check: associativity and distributivity over all triples
// when q <= 16 (sampled with a fixed seed above that), pairwise commutativity,
// identities and inverses over the whole field.
CheckReport verify_field_axioms(const Field& f);

}  // namespace cosetlab

#endif
