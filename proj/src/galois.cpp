#include "cosetlab/galois.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace cosetlab {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Remainder of a mod b over GF(p), both ascending, b nonzero with unit lead.
std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& b,
                               unsigned p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        unsigned lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j <= db; ++j) {
                unsigned sub = (lead * b[j]) % p;
                a[shift + j] = (a[shift + j] + p - sub) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

bool is_zero_poly(const std::vector<unsigned>& a) {
    for (unsigned c : a)
        if (c != 0) return false;
    return true;
}

}  // namespace

bool is_irreducible(unsigned p, const std::vector<unsigned>& poly) {
    const std::size_t m = poly.size() - 1;
    if (m < 1 || poly[m] != 1) return false;
    if (poly[0] == 0) return m == 1;  // divisible by x
    // Trial division by every monic polynomial of degree 1..m/2.
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<unsigned> g(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (is_zero_poly(poly_mod(poly, g, p))) return false;
        }
    }
    return true;
}

std::vector<unsigned> default_irreducible(unsigned p, unsigned m) {
    if (m == 1) return {0, 1};
    std::uint64_t count = 1;
    for (unsigned i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<unsigned> f(m + 1, 0);
        std::uint64_t t = idx;
        for (unsigned i = 0; i < m; ++i) {
            f[i] = static_cast<unsigned>(t % p);
            t /= p;
        }
        f[m] = 1;
        if (is_irreducible(p, f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable for prime p
}

Field::Field(FieldParams params) : params_(std::move(params)) {
    if (!is_prime(params_.p)) throw std::invalid_argument("p must be prime");
    if (params_.m < 1) throw std::invalid_argument("m must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < params_.m; ++i) {
        q *= params_.p;
        if (q > kMaxFieldSize) throw std::invalid_argument("field size p^m exceeds 256");
    }
    q_ = static_cast<unsigned>(q);
    if (params_.m == 1) {
        params_.poly.clear();  // unused
    } else {
        if (params_.poly.size() != params_.m + 1)
            throw std::invalid_argument("modulus must have degree m");
        for (unsigned c : params_.poly)
            if (c >= params_.p) throw std::invalid_argument("modulus coefficient out of range");
        if (params_.poly[params_.m] != 1) throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible(params_.p, params_.poly))
            throw std::invalid_argument("modulus is not irreducible over GF(p)");
    }
}

FieldElement Field::element(unsigned index) const {
    if (index >= q_) throw std::invalid_argument("element index out of range");
    FieldElement e;
    e.m_ = params_.m;
    for (unsigned j = 0; j < params_.m; ++j) {
        e.d_[j] = static_cast<std::uint8_t>(index % params_.p);
        index /= params_.p;
    }
    return e;
}

unsigned Field::index(const FieldElement& a) const {
    check_element(a);
    unsigned idx = 0;
    for (unsigned j = params_.m; j-- > 0;) idx = idx * params_.p + a.d_[j];
    return idx;
}

FieldElement Field::from_coords(const std::vector<unsigned>& coords) const {
    if (coords.size() != params_.m) throw std::invalid_argument("coordinate count must equal m");
    FieldElement e;
    e.m_ = params_.m;
    for (unsigned j = 0; j < params_.m; ++j) {
        if (coords[j] >= params_.p) throw std::invalid_argument("coordinate out of range");
        e.d_[j] = static_cast<std::uint8_t>(coords[j]);
    }
    return e;
}

std::vector<unsigned> Field::coords(const FieldElement& a) const {
    check_element(a);
    std::vector<unsigned> out(params_.m);
    for (unsigned j = 0; j < params_.m; ++j) out[j] = a.d_[j];
    return out;
}

void Field::check_element(const FieldElement& a) const {
    if (a.m_ != params_.m) throw std::invalid_argument("element does not belong to this field");
    for (unsigned j = 0; j < params_.m; ++j)
        if (a.d_[j] >= params_.p)
            throw std::invalid_argument("element coordinate out of range for this field");
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    FieldElement r;
    r.m_ = params_.m;
    for (unsigned j = 0; j < params_.m; ++j)
        r.d_[j] = static_cast<std::uint8_t>((a.d_[j] + b.d_[j]) % params_.p);
    return r;
}

FieldElement Field::neg(const FieldElement& a) const {
    check_element(a);
    FieldElement r;
    r.m_ = params_.m;
    for (unsigned j = 0; j < params_.m; ++j)
        r.d_[j] = static_cast<std::uint8_t>((params_.p - a.d_[j]) % params_.p);
    return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    return add(a, neg(b));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    const unsigned p = params_.p;
    const unsigned m = params_.m;
    std::array<unsigned, 15> prod{};  // degree <= 2m-2, m <= 8
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a.d_[i] * b.d_[j]) % p;
    for (unsigned deg = 2 * m - 2; deg >= m && deg < prod.size(); --deg) {
        unsigned lead = prod[deg];
        if (lead != 0) {
            prod[deg] = 0;
            for (unsigned j = 0; j < m; ++j) {
                unsigned sub = (lead * params_.poly[j]) % p;
                prod[deg - m + j] = (prod[deg - m + j] + p - sub) % p;
            }
        }
        if (deg == m) break;
    }
    FieldElement r;
    r.m_ = m;
    for (unsigned j = 0; j < m; ++j) r.d_[j] = static_cast<std::uint8_t>(prod[j]);
    return r;
}

FieldElement Field::inv(const FieldElement& a) const {
    check_element(a);
    if (a.is_zero()) throw std::domain_error("zero has no multiplicative inverse");
    const FieldElement unit = one();
    for (unsigned i = 1; i < q_; ++i) {
        FieldElement cand = element(i);
        if (mul(a, cand) == unit) return cand;
    }
    throw std::logic_error("inverse not found");  // impossible in a field
}

CheckReport verify_field_axioms(const Field& f) {
    CheckReport rep;
    rep.name = "field axioms GF(" + std::to_string(f.size()) + ")";
    const unsigned q = f.size();

    auto check_triple = [&](unsigned ia, unsigned ib, unsigned ic) {
        FieldElement a = f.element(ia), b = f.element(ib), c = f.element(ic);
        ++rep.cases;
        if (!(f.add(f.add(a, b), c) == f.add(a, f.add(b, c))))
            rep.violation("additive associativity fails at (" + std::to_string(ia) + "," +
                          std::to_string(ib) + "," + std::to_string(ic) + ")");
        if (!(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))))
            rep.violation("multiplicative associativity fails at (" + std::to_string(ia) + "," +
                          std::to_string(ib) + "," + std::to_string(ic) + ")");
        if (!(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))))
            rep.violation("distributivity fails at (" + std::to_string(ia) + "," +
                          std::to_string(ib) + "," + std::to_string(ic) + ")");
    };

    if (q <= 16) {
        for (unsigned ia = 0; ia < q; ++ia)
            for (unsigned ib = 0; ib < q; ++ib)
                for (unsigned ic = 0; ic < q; ++ic) check_triple(ia, ib, ic);
    } else {
        std::mt19937_64 rng(0x5eedu);
        std::uniform_int_distribution<unsigned> pick(0, q - 1);
        for (int s = 0; s < 20000; ++s) check_triple(pick(rng), pick(rng), pick(rng));
        rep.note("triples sampled (q > 16)");
    }

    for (unsigned ia = 0; ia < q; ++ia) {
        FieldElement a = f.element(ia);
        ++rep.cases;
        if (!(f.add(a, f.zero()) == a)) rep.violation("additive identity fails");
        if (!(f.mul(a, f.one()) == a)) rep.violation("multiplicative identity fails");
        if (!f.add(a, f.neg(a)).is_zero()) rep.violation("additive inverse fails");
        if (!a.is_zero() && !(f.mul(a, f.inv(a)) == f.one()))
            rep.violation("multiplicative inverse fails at " + std::to_string(ia));
        for (unsigned ib = 0; ib < q; ++ib) {
            FieldElement b = f.element(ib);
            if (!(f.add(a, b) == f.add(b, a))) rep.violation("additive commutativity fails");
            if (!(f.mul(a, b) == f.mul(b, a)))
                rep.violation("multiplicative commutativity fails");
        }
    }
    return rep;
}

}  // namespace cosetlab
