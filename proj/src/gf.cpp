#include "cwb/gf.hpp"

#include "cwb/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

namespace cwb {

namespace {

constexpr std::uint64_t table_limit = 1ULL << 20;

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t n)
{
    std::uint64_t r = 1 % n;
    a %= n;
    while (k) {
        if (k & 1)
            r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        k >>= 1;
    }
    return r;
}

// Dense polynomials over F_p, low-to-high, used only while choosing the modulus.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Poly pmod(Poly a, const Poly& f, std::uint64_t p)
{
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lcinv = powmod(f.back(), p - 2, p);
    while (a.size() >= f.size()) {
        const std::uint64_t c = mulmod(a.back(), lcinv, p);
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = (a[shift + i] + p - mulmod(c, f[i], p)) % p;
        trim(a);
    }
    return a;
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return pmod(std::move(r), f, p);
}

Poly ppowmod(Poly a, std::uint64_t k, const Poly& f, std::uint64_t p)
{
    Poly r{1};
    while (k) {
        if (k & 1)
            r = pmulmod(r, a, f, p);
        a = pmulmod(a, a, f, p);
        k >>= 1;
    }
    return r;
}

Poly pgcd(Poly a, Poly b, std::uint64_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree n is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= n/2.
bool irreducible(const Poly& f, std::uint64_t p)
{
    const std::size_t n = f.size() - 1;
    if (n <= 1)
        return true;
    Poly xp{0, 1};
    for (std::size_t i = 1; i <= n / 2; ++i) {
        xp = ppowmod(xp, p, f, p);
        Poly d = xp;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        trim(d);
        if (d.empty())
            return false;
        if (pgcd(f, d, p).size() > 1)
            return false;
    }
    return true;
}

} // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q)
{
    if (q < 2)
        return {0, 0};
    auto f = prime_factors(q);
    if (f.size() != 1)
        return {0, 0};
    unsigned e = 0;
    while (q > 1) {
        q /= f[0];
        ++e;
    }
    return {f[0], e};
}

FieldPtr Field::make(std::uint64_t q, unsigned m)
{
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
    auto [p, e] = prime_power(q);
    require(p != 0, "field order " + std::to_string(q) + " is not a prime power");
    require(m >= 1, "extension degree must be positive");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({q, m});
    if (it != cache.end())
        return it->second;
    FieldPtr f(new Field(p, e, m));
    cache[{q, m}] = f;
    return f;
}

Field::Field(std::uint64_t p, unsigned e, unsigned m) : p_(p), e_(e), m_(m), n_(e * m)
{
    long double bits = n_ * std::log2(static_cast<long double>(p));
    if (bits > 62.0L)
        fail(Errc::guard, "field too large: " + std::to_string(p) + "^" + std::to_string(n_));
    q_ = 1;
    for (unsigned i = 0; i < e_; ++i)
        q_ *= p_;
    Q_ = 1;
    ppow_.resize(n_ + 1);
    for (unsigned i = 0; i <= n_; ++i) {
        ppow_[i] = Q_;
        if (i < n_)
            Q_ *= p_;
    }
    find_modulus();
    find_gamma();
    if (Q_ <= table_limit && Q_ > 1) {
        exp_.resize(2 * (Q_ - 1));
        log_.assign(Q_, 0);
        Elem x = 1;
        for (std::uint64_t i = 0; i < Q_ - 1; ++i) {
            exp_[i] = x;
            exp_[i + Q_ - 1] = x;
            log_[x] = static_cast<std::uint32_t>(i);
            x = poly_mul(x, gamma_);
        }
    }
    omega_ = gpow(static_cast<long long>((Q_ - 1) / (q_ - 1)));
    sub_.push_back(0);
    for (std::uint64_t i = 0; i + 1 < q_; ++i)
        sub_.push_back(pow(omega_, i));
    build_coords();
}

void Field::find_modulus()
{
    // Smallest code sum c_i p^i over the lower coefficients of a monic irreducible.
    Poly f(n_ + 1, 0);
    f[n_] = 1;
    for (std::uint64_t code = 0; code < Q_; ++code) {
        std::uint64_t c = code;
        for (unsigned i = 0; i < n_; ++i) {
            f[i] = c % p_;
            c /= p_;
        }
        if (n_ > 1 && f[0] == 0)
            continue;
        if (irreducible(f, p_)) {
            mod_ = f;
            return;
        }
    }
    fail(Errc::internal, "no irreducible polynomial found");
}

void Field::find_gamma()
{
    if (Q_ == 2) {
        gamma_ = 1;
        return;
    }
    auto fac = prime_factors(Q_ - 1);
    for (Elem c = 1; c < Q_; ++c) {
        bool ok = true;
        for (auto r : fac)
            if (poly_pow(c, (Q_ - 1) / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gamma_ = c;
            return;
        }
    }
    fail(Errc::internal, "no primitive element found");
}

void Field::build_coords()
{
    omega_pows_.clear();
    for (unsigned j = 0; j < e_; ++j)
        omega_pows_.push_back(pow(omega_, j));
    // Columns: F_p digits of omega^j gamma^i, indexed i*e + j.
    const unsigned n = n_;
    std::vector<std::uint64_t> a(n * 2 * n, 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < e_; ++j) {
            auto d = digits(mul(omega_pows_[j], gpow(i)));
            for (unsigned r = 0; r < n; ++r)
                a[r * 2 * n + (i * e_ + j)] = d[r];
        }
    for (unsigned r = 0; r < n; ++r)
        a[r * 2 * n + n + r] = 1;
    // Gauss-Jordan mod p.
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && a[piv * 2 * n + c] == 0)
            ++piv;
        if (piv == n)
            fail(Errc::internal, "basis matrix singular");
        if (piv != c)
            for (unsigned k = 0; k < 2 * n; ++k)
                std::swap(a[piv * 2 * n + k], a[c * 2 * n + k]);
        const std::uint64_t iv = powmod(a[c * 2 * n + c], p_ - 2, p_);
        for (unsigned k = 0; k < 2 * n; ++k)
            a[c * 2 * n + k] = mulmod(a[c * 2 * n + k], iv, p_);
        for (unsigned r = 0; r < n; ++r) {
            if (r == c || a[r * 2 * n + c] == 0)
                continue;
            const std::uint64_t f = a[r * 2 * n + c];
            for (unsigned k = 0; k < 2 * n; ++k)
                a[r * 2 * n + k] = (a[r * 2 * n + k] + p_ - mulmod(f, a[c * 2 * n + k], p_)) % p_;
        }
    }
    binv_.assign(n * n, 0);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned k = 0; k < n; ++k)
            binv_[r * n + k] = a[r * 2 * n + n + k];
}

std::vector<std::uint64_t> Field::digits(Elem a) const
{
    std::vector<std::uint64_t> d(n_);
    for (unsigned i = 0; i < n_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

Elem Field::from_digits(const std::vector<std::uint64_t>& d) const
{
    Elem r = 0;
    for (unsigned i = 0; i < n_; ++i)
        r += d[i] * ppow_[i];
    return r;
}

Elem Field::poly_add(Elem a, Elem b) const
{
    if (p_ == 2)
        return a ^ b;
    Elem r = 0;
    for (unsigned i = 0; i < n_ && (a || b); ++i) {
        r += ((a % p_ + b % p_) % p_) * ppow_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

Elem Field::poly_mul(Elem a, Elem b) const
{
    if (a == 0 || b == 0)
        return 0;
    if (p_ == 2) {
        u128 r = 0;
        for (unsigned i = 0; i < n_; ++i)
            if ((b >> i) & 1)
                r ^= static_cast<u128>(a) << i;
        std::uint64_t low = 0;
        for (unsigned i = 0; i < n_; ++i)
            low |= mod_[i] << i;
        for (int i = 2 * static_cast<int>(n_) - 2; i >= static_cast<int>(n_); --i)
            if ((r >> i) & 1) {
                r ^= static_cast<u128>(1) << i;
                r ^= static_cast<u128>(low) << (i - n_);
            }
        return static_cast<Elem>(r);
    }
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> r(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        if (!da[i])
            continue;
        for (unsigned j = 0; j < n_; ++j)
            r[i + j] = (r[i + j] + da[i] * db[j]) % p_;
    }
    for (int i = 2 * static_cast<int>(n_) - 2; i >= static_cast<int>(n_); --i) {
        const std::uint64_t c = r[i];
        if (!c)
            continue;
        r[i] = 0;
        for (unsigned k = 0; k < n_; ++k)
            r[i - n_ + k] = (r[i - n_ + k] + (p_ - c) * mod_[k]) % p_;
    }
    r.resize(n_);
    return from_digits(r);
}

Elem Field::poly_pow(Elem a, std::uint64_t k) const
{
    Elem r = 1;
    while (k) {
        if (k & 1)
            r = poly_mul(r, a);
        a = poly_mul(a, a);
        k >>= 1;
    }
    return r;
}

Elem Field::add(Elem a, Elem b) const { return poly_add(a, b); }

Elem Field::neg(Elem a) const
{
    if (p_ == 2 || a == 0)
        return a;
    Elem r = 0;
    for (unsigned i = 0; i < n_ && a; ++i) {
        r += ((p_ - a % p_) % p_) * ppow_[i];
        a /= p_;
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const { return p_ == 2 ? a ^ b : add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const
{
    if (a == 0 || b == 0)
        return 0;
    if (tabled())
        return exp_[log_[a] + log_[b]];
    return poly_mul(a, b);
}

Elem Field::inv(Elem a) const
{
    if (a == 0)
        fail(Errc::division_by_zero, "inverse of zero");
    if (tabled())
        return exp_[(Q_ - 1 - log_[a]) % (Q_ - 1)];
    return poly_pow(a, Q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t k) const
{
    if (k == 0)
        return 1;
    if (a == 0)
        return 0;
    if (tabled())
        return exp_[mulmod(log_[a], k % (Q_ - 1), Q_ - 1)];
    return poly_pow(a, k % (Q_ - 1));
}

Elem Field::pow(Elem a, const BigInt& k) const
{
    if (k < 0)
        return pow(inv(a), BigInt(-k));
    if (k == 0)
        return 1;
    if (a == 0)
        return 0;
    BigInt r = k % (Q_ - 1);
    return pow(a, static_cast<std::uint64_t>(r));
}

Elem Field::frob(Elem a, long long j) const
{
    if (a == 0 || a == 1)
        return a;
    long long jj = j % static_cast<long long>(m_);
    if (jj < 0)
        jj += m_;
    if (jj == 0)
        return a;
    std::uint64_t k = powmod(q_, jj, Q_ - 1);
    if (k == 0)
        k = Q_ - 1;
    return pow(a, k);
}

Elem Field::gpow(long long i) const
{
    const long long n = static_cast<long long>(Q_ - 1);
    long long r = i % n;
    if (r < 0)
        r += n;
    if (tabled())
        return exp_[r];
    return poly_pow(gamma_, static_cast<std::uint64_t>(r));
}

std::uint64_t Field::log(Elem a) const
{
    if (a == 0)
        fail(Errc::division_by_zero, "logarithm of zero");
    if (tabled())
        return log_[a];
    // Baby-step giant-step.
    const std::uint64_t n = Q_ - 1;
    std::uint64_t s = 1;
    while (s * s < n)
        ++s;
    std::unordered_map<Elem, std::uint64_t> baby;
    Elem x = 1;
    for (std::uint64_t j = 0; j < s; ++j) {
        baby.emplace(x, j);
        x = poly_mul(x, gamma_);
    }
    const Elem giant = poly_pow(inv(gamma_), s);
    Elem y = a;
    for (std::uint64_t i = 0; i <= s; ++i) {
        auto it = baby.find(y);
        if (it != baby.end())
            return (i * s + it->second) % n;
        y = poly_mul(y, giant);
    }
    fail(Errc::internal, "discrete logarithm not found");
}

std::size_t Field::sub_index(Elem a) const
{
    if (a == 0)
        return 0;
    const std::uint64_t step = (Q_ - 1) / (q_ - 1);
    const std::uint64_t l = log(a);
    if (l % step != 0)
        fail(Errc::invalid_argument, "element not in the subfield");
    return static_cast<std::size_t>(l / step + 1);
}

std::vector<Elem> Field::coords(Elem a) const
{
    auto d = digits(a);
    std::vector<Elem> c(m_, 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < e_; ++j) {
            const unsigned r = i * e_ + j;
            std::uint64_t x = 0;
            for (unsigned k = 0; k < n_; ++k)
                x = (x + mulmod(binv_[r * n_ + k], d[k], p_)) % p_;
            if (x)
                c[i] = add(c[i], mul(x, omega_pows_[j]));
        }
    return c;
}

Elem Field::from_coords(const std::vector<Elem>& c) const
{
    require(c.size() == m_, "coordinate vector length must equal m");
    Elem r = 0;
    for (unsigned i = 0; i < m_; ++i)
        if (c[i])
            r = add(r, mul(c[i], gpow(i)));
    return r;
}

Elem Field::from_int(std::int64_t c) const
{
    long long r = c % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return static_cast<Elem>(r);
}

std::string Field::str(Elem a) const
{
    if (a == 0)
        return "0";
    if (a == 1)
        return "1";
    return "g^" + std::to_string(log(a));
}

Element::Element(FieldPtr f, Elem v) : f_(std::move(f)), v_(v)
{
    require(f_ != nullptr, "element without field");
    require(v_ < f_->order(), "element code out of range");
}

void Element::same(const Element& o) const
{
    if (f_ != o.f_)
        fail(Errc::field_mismatch, "operands belong to different fields");
}

Element Element::operator+(const Element& o) const
{
    same(o);
    return {f_, f_->add(v_, o.v_)};
}

Element Element::operator-(const Element& o) const
{
    same(o);
    return {f_, f_->sub(v_, o.v_)};
}

Element Element::operator*(const Element& o) const
{
    same(o);
    return {f_, f_->mul(v_, o.v_)};
}

Element Element::operator/(const Element& o) const
{
    same(o);
    return {f_, f_->div(v_, o.v_)};
}

Element Element::inv() const { return {f_, f_->inv(v_)}; }

Element Element::pow(const BigInt& k) const { return {f_, f_->pow(v_, k)}; }

Element Element::frob(long long j) const { return {f_, f_->frob(v_, j)}; }

bool Element::operator==(const Element& o) const { return f_ == o.f_ && v_ == o.v_; }

} // namespace cwb
