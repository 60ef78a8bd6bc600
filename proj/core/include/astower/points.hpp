/*
 * Rational chain enumeration for the recursive tower equation over F_{2^k}:
 * value-distribution point counts, the complete-splitting checks over F_8,
 * and the asymptotic ratio table against the classical bounds.
 */
#pragma once

#include "astower/gf2m.hpp"
#include "astower/rami.hpp"

#include <string>
#include <vector>

namespace astower::points {

using rami::BigInt;

/*
 * Chain-end value frequencies over one field: counts[v] is the number of
 * admissible chains (x_0, ..., x_j) with all interior coordinates nonzero
 * ending at the element with bit pattern v.
 */
struct ValueDistribution {
    gf2m::FieldDescriptor field;
    std::vector<long long> counts;
};

/*
 * Number of tuples (x_0, ..., x_i) over F_{2^k} with x_j != 0 for j < i and
 * x_j^2 + x_j = x_{j-1} + 1 + 1/x_{j-1} at every step.  Propagates a value
 * distribution level by level (each trace-zero image feeds both roots), so
 * the cost is O(2^k i) rather than O(2^{ki}).  Requires i >= 1, 1 <= k <= 24.
 */
long long affine_count(int i, int k);

/* Depth-first reference enumeration of the same chains; exponential, for
 * cross-checking the propagation on small instances. */
long long affine_count_naive(int i, int k);

/*
 * Complete-splitting report over F_{2^k} with S = F_{2^k} - F_2:
 *   forward_image:   { x + 1 + 1/x : x in S } equals the Frobenius orbit of
 *                    the field generator,
 *   wp_image:        { y^2 + y : y in S } equals the same orbit,
 *   successor_pairs: every x in S has exactly two successors, both in S,
 *   sweep:           the successors of S cover exactly S.
 * k = 1 leaves S empty and reports not-applicable.
 */
struct SplitReport {
    int k = 0;
    bool applicable = false;
    bool forward_image = false;
    bool wp_image = false;
    bool successor_pairs = false;
    bool sweep = false;

    bool passed() const {
        return applicable && forward_image && wp_image && successor_pairs && sweep;
    }
};

SplitReport split_check(int k);

/* Point count over F_8 at one level.  enumerated marks counts confirmed by
 * chain enumeration; beyond level 20 the closed 6 2^i + 2 value is reported
 * with enumeration skipped. */
struct F8Count {
    long long value = 0;
    bool enumerated = false;
};

F8Count rational_count_f8(int i);

/* One row of the asymptotics table.  ratio is N8 / genus as a reduced exact
 * fraction; ratio_float is its 6-decimal round-half-even rendering. */
struct TowerStats {
    int i = 0;
    long long n_i = 0;
    BigInt genus_hurwitz;
    BigInt genus_closed;
    long long n8 = 0;
    bool n8_enumerated = false;
    BigInt ratio_num;
    BigInt ratio_den;
    std::string ratio_float;
};

struct AsymptoticsReport {
    std::vector<TowerStats> rows;
    double dv_bound = 0.0;         // sqrt(8) - 1
    BigInt zink_num, zink_den;     // 2(p^2-1)/(p+2) at p = 2
    BigInt kummer_num, kummer_den; // 2/(q-2) at q = 8
    BigInt limit_num, limit_den;   // leading-term ratio of count to genus
    bool limit_equals_zink = false;
};

/*
 * Rows for levels 1..i_max (level 0 alone when i_max = 0: the projective
 * line row keeps the unreduced 9/0 ratio and renders as inf) plus the bound
 * constants.
 */
AsymptoticsReport asymptotics_table(int i_max);

/* Exact test N8/g < sqrt(8) - 1, i.e. (N8 + g)^2 < 8 g^2; g must be > 0. */
bool ratio_below_dv(long long n8, const BigInt& g);

/* 6-decimal round-half-even rendering of num/den; "inf" when den = 0. */
std::string format_ratio(const BigInt& num, const BigInt& den);

} // namespace astower::points
