#include "astower/gf2m.hpp"

#include <stdexcept>
#include <vector>

namespace astower::gf2m {

namespace {

/* Product in GF(2^m) with reduction by modulus after every doubling step. */
std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, int m, std::uint64_t modulus) {
    std::uint64_t acc = 0;
    std::uint64_t cur = a;
    const std::uint64_t high = 1ull << m;
    const std::uint64_t red = modulus ^ high; // modulus minus its leading term
    while (b) {
        if (b & 1u) acc ^= cur;
        b >>= 1;
        cur <<= 1;
        if (cur & high) cur = (cur ^ high) ^ red;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t powmod(std::uint32_t x, std::uint64_t e, int m, std::uint64_t modulus) {
    std::uint32_t acc = 1;
    while (e) {
        if (e & 1) acc = mulmod(acc, x, m, modulus);
        x = mulmod(x, x, m, modulus);
        e >>= 1;
    }
    return acc;
}

/* Prime factors of n (n < 2^32 after trial division up to 2^16 leaves a prime). */
std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= 65536 && p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/*
 * Least element of multiplicative order 2^m - 1.  Candidate passes iff
 * g^((2^m-1)/p) != 1 for every prime p dividing the group order.
 */
std::uint32_t least_primitive(int m, std::uint64_t modulus) {
    const std::uint64_t order = (1ull << m) - 1;
    if (order == 1) return 1; // GF(2): the unit group is trivial
    const auto primes = prime_factors(order);
    for (std::uint32_t g = 2;; ++g) {
        bool ok = true;
        for (auto p : primes) {
            if (powmod(g, order / p, m, modulus) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!(a.field == b.field))
        throw std::invalid_argument("field elements belong to different fields");
}

} // namespace

int poly_degree(std::uint64_t p) {
    int d = -1;
    while (p) { ++d; p >>= 1; }
    return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    if (b == 0) throw std::domain_error("polynomial division by zero");
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; --da) {
        if (a >> da & 1) a ^= b << (da - db);
    }
    return a;
}

/*
 * Trial division by every polynomial of degree d for d = 1..deg/2.  Quadratic
 * in 2^(deg/2), fine for deg <= 32; correctness over speed here since each
 * field is constructed once.
 */
bool poly_irreducible(std::uint64_t p) {
    const int deg = poly_degree(p);
    if (deg <= 0) return false;
    for (int d = 1; 2 * d <= deg; ++d) {
        for (std::uint64_t q = 1ull << d; q < (2ull << d); ++q) {
            if (poly_mod(p, q) == 0) return false;
        }
    }
    return true;
}

FieldDescriptor field_new(int m, std::optional<std::uint64_t> modulus) {
    if (m < 1 || m > 32) throw std::invalid_argument("field degree must be in [1,32]");
    std::uint64_t mod;
    if (modulus) {
        mod = *modulus;
        if (poly_degree(mod) != m) throw std::invalid_argument("modulus degree mismatch");
        if (!poly_irreducible(mod)) throw std::invalid_argument("modulus is reducible");
    } else {
        mod = 0;
        for (std::uint64_t c = 1ull << m; c < (2ull << m); ++c) {
            if (poly_irreducible(c)) { mod = c; break; }
        }
        if (!mod) throw std::logic_error("no irreducible polynomial found");
    }
    FieldDescriptor f;
    f.m = m;
    f.modulus = mod;
    f.generator = least_primitive(m, mod);
    return f;
}

FieldElement element(const FieldDescriptor& field, std::uint32_t coeffs) {
    if (field.m < 32 && (coeffs >> field.m) != 0)
        throw std::invalid_argument("coefficient bits outside the field");
    return FieldElement{field, coeffs};
}

FieldElement zero(const FieldDescriptor& field) { return FieldElement{field, 0}; }
FieldElement one(const FieldDescriptor& field) { return FieldElement{field, 1}; }

FieldElement add(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement{a.field, a.coeffs ^ b.coeffs};
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement{a.field, mulmod(a.coeffs, b.coeffs, a.field.m, a.field.modulus)};
}

FieldElement inv(const FieldElement& x) {
    if (x.coeffs == 0) throw std::domain_error("inverse of zero");
    const std::uint64_t order = (1ull << x.field.m) - 1;
    return FieldElement{x.field, powmod(x.coeffs, order - 1, x.field.m, x.field.modulus)};
}

FieldElement pow(const FieldElement& x, long long e) {
    if (e < 0) return pow(inv(x), -e);
    return FieldElement{x.field,
                        powmod(x.coeffs, static_cast<std::uint64_t>(e), x.field.m, x.field.modulus)};
}

FieldElement wp(const FieldElement& x) { return add(mul(x, x), x); }

int trace(const FieldElement& x) {
    std::uint32_t acc = 0;
    std::uint32_t cur = x.coeffs;
    for (int i = 0; i < x.field.m; ++i) {
        acc ^= cur;
        cur = mulmod(cur, cur, x.field.m, x.field.modulus);
    }
    if (acc > 1) throw std::logic_error("trace escaped the prime field");
    return static_cast<int>(acc);
}

std::optional<std::pair<FieldElement, FieldElement>>
solve_artin_schreier(const FieldElement& c) {
    if (trace(c) != 0) return std::nullopt;
    const int m = c.field.m;
    const std::uint64_t mod = c.field.modulus;
    std::uint32_t y = 0;
    if (m % 2 == 1) {
        /* Half trace: y = sum c^(4^i), i = 0..(m-1)/2; works only for odd m. */
        std::uint32_t cur = c.coeffs;
        for (int i = 0; i <= (m - 1) / 2; ++i) {
            y ^= cur;
            cur = mulmod(cur, cur, m, mod);
            cur = mulmod(cur, cur, m, mod);
        }
    } else {
        /*
         * Even m: solve the linear system A y = c where A is the matrix of
         * y -> y^2 + y over the polynomial basis.  A has a one-dimensional
         * kernel (spanned by 1); the free variable is pinned to 0 and the
         * two solutions differ by that kernel vector.
         */
        std::vector<std::uint32_t> rows(m); // row i = equation for coordinate i
        for (int j = 0; j < m; ++j) {
            std::uint32_t basis = 1u << j;
            std::uint32_t img = mulmod(basis, basis, m, mod) ^ basis;
            for (int i = 0; i < m; ++i)
                if (img >> i & 1) rows[i] |= 1u << j;
        }
        std::vector<std::uint32_t> rhs(m);
        for (int i = 0; i < m; ++i) rhs[i] = (c.coeffs >> i) & 1;

        std::vector<int> pivot_col(m, -1);
        int rank = 0;
        for (int col = 0; col < m && rank < m; ++col) {
            int sel = -1;
            for (int r = rank; r < m; ++r)
                if (rows[r] >> col & 1) { sel = r; break; }
            if (sel < 0) continue;
            std::swap(rows[rank], rows[sel]);
            std::swap(rhs[rank], rhs[sel]);
            for (int r = 0; r < m; ++r) {
                if (r != rank && (rows[r] >> col & 1)) {
                    rows[r] ^= rows[rank];
                    rhs[r] ^= rhs[rank];
                }
            }
            pivot_col[rank] = col;
            ++rank;
        }
        for (int r = rank; r < m; ++r)
            if (rhs[r]) throw std::logic_error("trace-zero element with unsolvable system");
        for (int r = 0; r < rank; ++r)
            if (rhs[r]) y |= 1u << pivot_col[r];
    }
    std::uint32_t check = mulmod(y, y, m, mod) ^ y;
    if (check != c.coeffs) throw std::logic_error("artin-schreier solution fails verification");
    const std::uint32_t lo = y & ~1u;
    return std::make_pair(FieldElement{c.field, lo}, FieldElement{c.field, lo | 1u});
}

FieldElement embed_f4(const FieldElement& x, const FieldDescriptor& target) {
    if (x.field.m != 2) throw std::invalid_argument("embed_f4 source must be the 4-element field");
    if (target.m % 2 != 0) throw std::invalid_argument("no 4-element subfield in odd degree");
    if (x.coeffs > 3) throw std::logic_error("malformed 4-element field value");
    /* rho maps to the least root of z^2 + z + 1 = 0, i.e. of wp(z) = 1. */
    auto sol = solve_artin_schreier(one(target));
    if (!sol) throw std::logic_error("unit trace nonzero in even degree field");
    FieldElement rho_img = sol->first;
    FieldElement out = zero(target);
    if (x.coeffs & 1u) out = add(out, one(target));
    if (x.coeffs & 2u) out = add(out, rho_img);
    return out;
}

} // namespace astower::gf2m
