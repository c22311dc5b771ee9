#pragma once

#include "cwb/bigint.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace cwb {

// Elements are encoded as integers sum_i c_i p^i, where c_i are the
// coefficients of the residue modulo the defining polynomial.
using Elem = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_{q^m} with q = p^e, realised as F_p[z]/(M) with deg M = e*m.
// F_q is the subfield fixed by a -> a^q, generated by omega = gamma^((Q-1)/(q-1)).
// The F_q-basis of F_{q^m} is (1, gamma, ..., gamma^(m-1)).
class Field {
public:
    // Cached per (q, m): repeated calls return the same handle.
    static FieldPtr make(std::uint64_t q, unsigned m = 1);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned m() const { return m_; }
    unsigned degree() const { return n_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t order() const { return Q_; }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }
    bool tabled() const { return !exp_.empty(); }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const;
    Elem pow(Elem a, const BigInt& k) const;
    // a^(q^j); j is reduced modulo m.
    Elem frob(Elem a, long long j) const;

    Elem gamma() const { return gamma_; }
    Elem gpow(long long i) const;
    std::uint64_t log(Elem a) const;
    Elem omega() const { return omega_; }

    // F_q listed as 0, omega^0, ..., omega^(q-2).
    const std::vector<Elem>& subfield() const { return sub_; }
    bool in_subfield(Elem a) const { return frob(a, 1) == a; }
    std::size_t sub_index(Elem a) const;

    std::vector<Elem> coords(Elem a) const;
    Elem from_coords(const std::vector<Elem>& c) const;
    Elem basis(unsigned i) const { return gpow(i); }

    // The prime-field element c (0 <= c < p).
    Elem from_int(std::int64_t c) const;

    std::string str(Elem a) const;

private:
    Field(std::uint64_t p, unsigned e, unsigned m);

    std::vector<std::uint64_t> digits(Elem a) const;
    Elem from_digits(const std::vector<std::uint64_t>& d) const;
    Elem poly_mul(Elem a, Elem b) const;
    Elem poly_pow(Elem a, std::uint64_t k) const;
    Elem poly_add(Elem a, Elem b) const;
    void find_modulus();
    void find_gamma();
    void build_coords();

    std::uint64_t p_;
    unsigned e_, m_, n_;
    std::uint64_t q_, Q_;
    std::vector<std::uint64_t> mod_;   // monic, low-to-high, size n_+1
    std::vector<std::uint64_t> ppow_;  // p^i
    Elem gamma_ = 0, omega_ = 1;
    std::vector<Elem> exp_;            // 2(Q-1) entries when tabled
    std::vector<std::uint32_t> log_;
    std::vector<Elem> sub_;
    std::vector<std::uint64_t> binv_;  // inverse of the F_p basis matrix, n_ x n_
    std::vector<Elem> omega_pows_;     // omega^j, j < e
};

// Checked element wrapper for callers that mix fields.
class Element {
public:
    Element(FieldPtr f, Elem v);
    Elem value() const { return v_; }
    const FieldPtr& field() const { return f_; }
    bool is_zero() const { return v_ == 0; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator/(const Element& o) const;
    Element inv() const;
    Element pow(const BigInt& k) const;
    Element frob(long long j) const;
    bool operator==(const Element& o) const;

private:
    void same(const Element& o) const;
    FieldPtr f_;
    Elem v_;
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n);
// Returns (p, e) with q = p^e, or (0, 0) if q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

} // namespace cwb
