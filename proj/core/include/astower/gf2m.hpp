#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace astower::gf2m {

/*
 * GF(2^m) in a fixed polynomial basis, 1 <= m <= 32.  modulus is the degree-m
 * reduction polynomial as a bit pattern (bit k = coefficient of t^k); it is
 * verified irreducible at construction by a brute-force factor scan.
 * generator is the least primitive element, verified by an order check
 * against the factorization of 2^m - 1.
 */
struct FieldDescriptor {
    int m = 0;
    std::uint64_t modulus = 0;
    std::uint32_t generator = 0;

    friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/*
 * Element of GF(2^m): polynomial-basis coordinates as a bit pattern with no
 * set bits at positions >= m.  Plain value type; combining elements of
 * different fields is a hard error, never a coercion.
 */
struct FieldElement {
    FieldDescriptor field;
    std::uint32_t coeffs = 0;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/*
 * Defaults: m=2 -> t^2+t+1, m=3 -> t^3+t+1, otherwise the lexicographically
 * least irreducible of degree m, so results are reproducible bit for bit.
 * Throws std::invalid_argument for m outside [1,32] or a reducible modulus.
 */
FieldDescriptor field_new(int m, std::optional<std::uint64_t> modulus = std::nullopt);

/* Throws std::invalid_argument if coeffs has set bits at positions >= m. */
FieldElement element(const FieldDescriptor& field, std::uint32_t coeffs);
FieldElement zero(const FieldDescriptor& field);
FieldElement one(const FieldDescriptor& field);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& x);              // throws std::domain_error on zero
FieldElement pow(const FieldElement& x, long long e); // negative e inverts first

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

/* wp(x) = x^2 + x, the Artin-Schreier operator. */
FieldElement wp(const FieldElement& x);

/* trace(x) = x + x^2 + x^4 + ... + x^(2^(m-1)), always 0 or 1. */
int trace(const FieldElement& x);

/*
 * Both solutions {y, y+1} of y^2 + y = c, ordered by bit pattern, or nullopt
 * when trace(c) = 1 (absence of solutions is a valid return, not an error).
 * Odd m uses the half-trace closed form; even m solves the F_2-linear system
 * of y -> y^2 + y over the polynomial basis.
 */
std::optional<std::pair<FieldElement, FieldElement>> solve_artin_schreier(const FieldElement& c);

/*
 * Ring embedding of F_4 into GF(2^k) for even k.  The image of rho (bit
 * pattern 2) is the lexicographically least root of z^2 + z + 1 in the
 * target, so the embedding is consistent across calls.  Throws
 * std::invalid_argument when k is odd.
 */
FieldElement embed_f4(const FieldElement& x, const FieldDescriptor& target);

/* F_2[t] helpers, shared with tests: bit patterns encode polynomials. */
int poly_degree(std::uint64_t p);
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b);
bool poly_irreducible(std::uint64_t p);

} // namespace astower::gf2m
