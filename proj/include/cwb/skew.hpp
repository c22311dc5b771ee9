#pragma once

#include "cwb/gf.hpp"
#include "cwb/linalg.hpp"

#include <climits>
#include <utility>
#include <vector>

namespace cwb {

// F_{q^m}[X; theta, delta] with theta = sigma^j and delta(a) = beta*a - theta(a)*beta.
struct SkewRing {
    FieldPtr F;
    int j = 1;
    Elem beta = 0;

    SkewRing(FieldPtr f, int theta_power = 1, Elem derivation_beta = 0);
    Elem theta(Elem a, long long k = 1) const { return F->frob(a, static_cast<long long>(j) * k); }
    Elem delta(Elem a) const;
    bool operator==(const SkewRing& o) const { return F == o.F && j == o.j && beta == o.beta; }
};

// Left form: f = sum_i f[i] X^i. The zero polynomial is empty.
using SPoly = std::vector<Elem>;

constexpr int deg_zero = INT_MIN;
int deg(const SPoly& f);
void trim(SPoly& f);
SPoly monomial(Elem c, std::size_t i);

SPoly add(const SkewRing& R, const SPoly& f, const SPoly& g);
SPoly sub(const SkewRing& R, const SPoly& f, const SPoly& g);
SPoly mul(const SkewRing& R, const SPoly& f, const SPoly& g);
// c * f
SPoly scale(const SkewRing& R, Elem c, const SPoly& f);
SPoly monic(const SkewRing& R, const SPoly& f);

// f = q*g + r
std::pair<SPoly, SPoly> right_divide(const SkewRing& R, const SPoly& f, const SPoly& g);
// f = g*q + r
std::pair<SPoly, SPoly> left_divide(const SkewRing& R, const SPoly& f, const SPoly& g);

struct EeaResult {
    SPoly gcrd, lclm;
    SPoly u, v; // u*f + v*g = gcrd
};
EeaResult gcrd_lclm(const SkewRing& R, const SPoly& f, const SPoly& g);

// Truncated norm N_i(a).
Elem norm(const SkewRing& R, std::size_t i, Elem a);
// Remainder evaluation sum_i f_i N_i(a).
Elem eval(const SkewRing& R, const SPoly& f, Elem a);

Elem conjugate(const SkewRing& R, Elem a, Elem c);
// Canonical representative of the conjugacy class of a.
Elem class_rep(const SkewRing& R, Elem a);

SPoly minimal_polynomial(const SkewRing& R, const std::vector<Elem>& omega);
SPoly minimal_polynomial_lclm(const SkewRing& R, const std::vector<Elem>& omega);

Mat vandermonde(const SkewRing& R, const std::vector<Elem>& omega, std::size_t k);
bool is_p_independent(const SkewRing& R, const std::vector<Elem>& omega);

// Right form r = sum_i X^i r[i].
SPoly left_to_right(const SkewRing& R, const SPoly& f);
SPoly right_to_left(const SkewRing& R, const SPoly& r);

std::string to_string(const SkewRing& R, const SPoly& f);

} // namespace cwb
