#pragma once

#include "cwb/bigint.hpp"
#include "cwb/gf.hpp"
#include "cwb/linalg.hpp"

#include <vector>

namespace cwb {

// GRS code {c : H diag(v) c = 0} with H_{i,j} = alpha_j^i, 0 <= i <= d-2.
struct GrsSpec {
    FieldPtr F;
    std::vector<Elem> alpha;
    std::vector<Elem> v;
    std::size_t d = 1;

    std::size_t n() const { return alpha.size(); }
    std::size_t k() const { return n() - d + 1; }
    void check() const;
};

// alpha_j = gamma^(j-1), v = 1.
GrsSpec default_grs(FieldPtr F, std::size_t n, std::size_t d);

Mat parity_check(const GrsSpec& spec);
// Basis of the GRS code (k x n).
Mat grs_generator(const GrsSpec& spec);

struct AlternantCode {
    GrsSpec parent;
    Mat parity_q;  // m(d-1) x n over F_q
    Mat basis;     // k_A x n over F_q
    std::size_t dim() const { return basis.rows; }
};

AlternantCode subfield_subcode(const GrsSpec& spec);

// A_w of an [n, k] MDS code over an alphabet of size Q.
BigInt mds_weight_enum(std::size_t n, std::size_t k, const BigInt& Q, std::size_t w);
// B_{n,d,w} = A_w (q^m-1)^(n-w) (q-1)^w.
BigInt b_mds(std::size_t n, std::size_t d, std::size_t w, std::uint64_t q, unsigned m);
// B_{n,d} = (q^m-1)^n + sum_{w>=d} B_{n,d,w}.
BigInt b_mds_total(std::size_t n, std::size_t d, std::uint64_t q, unsigned m);

} // namespace cwb
