#pragma once

#include <map>
#include <utility>
#include <vector>

#include "astower/gf2m.hpp"
#include "astower/index_seq.hpp"

namespace astower::laurent {

using gf2m::FieldDescriptor;
using gf2m::FieldElement;

/*
 * Truncated Laurent series: stored coefficients cover orders
 * [min_order, precision); orders >= precision are unknown, orders below
 * min_order are exactly zero.  A series whose stored window is all zero is
 * "zero to working precision" -- operations needing a leading term reject it.
 * Every operation reports the honestly-known precision of its result; squaring
 * is exact in characteristic 2 and doubles the window.
 */
struct LaurentSeries {
    FieldDescriptor field;
    int min_order = 0;
    int precision = 0;
    std::vector<FieldElement> coeffs; // coeffs[n] = coefficient of t^(min_order+n)
};

LaurentSeries series_zero(const FieldDescriptor& field, int precision);
LaurentSeries series_monomial(const FieldElement& c, int order, int precision);
LaurentSeries series_constant(const FieldElement& c, int precision);

/* Order of the lowest nonzero stored coefficient; equals precision when the
 * stored window is entirely zero. */
int order(const LaurentSeries& s);
/* Coefficient of t^n; zero below the window, out_of_range at n >= precision. */
FieldElement coeff(const LaurentSeries& s, int n);
LaurentSeries truncate(const LaurentSeries& s, int new_precision);

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);
/* Multiplicative inverse; the window becomes [-d, P-2d) for input order d.
 * Throws domain_error when the input is zero to working precision. */
LaurentSeries inv(const LaurentSeries& a);
/* s -> s^2, exact: coefficient orders double, precision doubles. */
LaurentSeries frobenius_square(const LaurentSeries& a);
/* s -> s^2 + s. */
LaurentSeries wp(const LaurentSeries& a);
/* The unique positive-order root y of y^2 + y = c; requires every stored
 * coefficient of c at order <= 0 to vanish.  Precision is preserved. */
LaurentSeries solve_wp(const LaurentSeries& c);

/*
 * Local expansions along a boundary chain: seq = (a_0, a_1, ...) with entries
 * in GF(4), consecutive entries satisfying the successor relation and all but
 * possibly the last nonzero.  Returns series m_0 = t, m_1, ..., where
 * x_j = a_j + m_j parametrizes the chain near the point and each m_j solves
 * wp(m_j) = (a_{j-1} + m_{j-1}) + 1 + 1/(a_{j-1} + m_{j-1}) + wp(a_j),
 * whose constant term cancels exactly by the successor relation.
 */
std::vector<LaurentSeries> chain_expand(const IndexSequence& seq, int precision);

/*
 * Exact principal part at the chain origin: map from exponent e >= 1 to the
 * nonzero coefficient of t^{-e}.  Never truncated.
 */
using PrincipalPart = std::map<int, FieldElement>;

PrincipalPart pp_add(const PrincipalPart& a, const PrincipalPart& b);
PrincipalPart pp_scale(const FieldElement& c, const PrincipalPart& a);
PrincipalPart pp_square(const PrincipalPart& a);
PrincipalPart pp_wp(const PrincipalPart& a);
/* Stored negative-order part of a series (complete only if min_order covers it). */
PrincipalPart principal_part(const LaurentSeries& s);

/*
 * F_j = principal part of 1/m_j, computed by the exact two-term recursion:
 * F_0 = 1/t, then alternately F <- F^2 + F and F <- a_{s-1} * F, the parity
 * of the squaring steps fixed by whether a_0 = 1 or a_0 in {rho, rho^2}.
 * 2-linearized shape: support on power-of-two exponents, coefficients GF(4).
 */
PrincipalPart principal_F(const IndexSequence& seq, int j);

/* Index class of a chain: 0 when a_0 = 1, 1 when a_0 in {rho, rho^2}. */
int chain_class(const IndexSequence& seq);
/* Top exponent of F_j: 2^floor((j+1-chain_class)/2). */
int f_top_exponent(int j, int cls);

/*
 * Coefficient table over F-slots: slot j -> GF(4) coefficient, all slots of
 * one parity (even when a_0 = 1, odd otherwise).
 */
using BTable = std::map<int, FieldElement>;

struct HeadReduction {
    BTable lower;           // inside wp: sum over slots of lower[j] * F_j
    int bstar = 0;          // 0 or 1, the surviving multiple of F_bottom
    PrincipalPart residual; // bstar * F_bottom, exact
};

/*
 * Rewrites sum_{j >= bottom+2} B[j] F_j as wp(sum lower[j] F_j) + bstar *
 * F_bottom, exactly as polynomials in 1/t.  bottom is 0 or 1 per the chain
 * class; input slots must sit at bottom+2, bottom+4, ....  The surviving
 * coefficient bstar always lies in GF(2).
 */
HeadReduction head_reduce(const BTable& b_in, const IndexSequence& seq);

enum class StepKind { TotallyRamified, Unramified };

/*
 * Symbolic classification of the tower step above the t-th boundary point of
 * the chain that starts at a zero of x_i (seq = zero sequence, trailing 0).
 * Tracks the right-hand side of each Artin-Schreier step as GF(4)-linear
 * combinations of the F_j and of simple-pole symbols created at earlier
 * ramified steps; a step is unramified exactly when the non-wp residue can be
 * cancelled by wp-substitutions, and totally ramified (contribution 2) when
 * an odd-order residue survives.  ord is the resulting pole order of the new
 * tower coordinate at the point above.
 */
struct StepReport {
    StepKind kind = StepKind::Unramified;
    int contribution = 0;        // 2 when totally ramified
    long long ord = 0;           // ord of x_{i+t+1} at the point above, < 0
    std::map<int, int> fslots;   // post-step state: F-slot -> GF(4) value
    std::map<int, int> symcoef;  // post-step state: symbol -> GF(4) value
};

StepReport classify_step_symbolic(const IndexSequence& seq, int t_step);

} // namespace astower::laurent
