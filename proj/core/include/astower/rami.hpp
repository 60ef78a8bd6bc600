/*
 * Combinatorial ramification ledger for the tower boundary: enumerates the
 * index sequences of boundary points, classifies each step with the closed
 * parity rules, counts ramified points per level, and computes the genus two
 * independent ways.
 */
#pragma once

#include "astower/index_seq.hpp"
#include "astower/laurent.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace astower::rami {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Class of a boundary chain: One when the sequence bottoms out at a_0 = 1,
 * Rho when a_0 is in GF(4)-GF(2), Special for the two all-boundary chains
 * (0, inf, inf, ...) and (inf, inf, ...).
 */
enum class ChainClass { One, Rho, Special };

/* Chain class forced by the level parity of a zero sequence. */
inline ChainClass class_of_level(int origin_i) {
    return (origin_i % 2 == 0) ? ChainClass::One : ChainClass::Rho;
}

/*
 * One boundary point class: a zero of x_{origin_i} continued by tail_j
 * infinity steps, carrying mult geometric points on C_{origin_i + tail_j}.
 * Special entries use origin_i = 0 and always have mult 1.
 */
struct LedgerEntry {
    int origin_i = 0;
    ChainClass a0_class = ChainClass::Special;
    int tail_j = 0;
    long long mult = 1;
};

/*
 * All index sequences (a_0, ..., a_i) describing zeros of x_i: a_i = 0,
 * entries at odd distance from the top in GF(4)-GF(2), at even distance 1.
 * Lexicographic order with rho before rho^2; size 2^ceil(i/2).  Requires
 * i >= 1.
 */
std::vector<IndexSequence> zero_sequences(int i);

/*
 * Closed classification of the step above tail_j for a chain of the given
 * class rooted at level origin_i.  One: ramified exactly when tail_j is even
 * and at most origin_i - 2, or tail_j >= origin_i.  Rho: ramified exactly
 * when tail_j is even and at most origin_i - 3, or tail_j >= origin_i - 1.
 * Special chains ramify at every step.  Empty ranges are permitted.
 */
laurent::StepKind classify_closed(int origin_i, int tail_j, ChainClass a0_class);

/*
 * The boundary ledger of C_level: one entry per zero sequence of each origin
 * level 1..level (tail_j = level - origin), plus the two special chains.
 * mult doubles at each unramified step of the tail and is unchanged at each
 * totally ramified one.  Exponential in level; intended for small levels.
 */
std::vector<LedgerEntry> ledger(int level);

/*
 * Number of ramified points in the cover C_{level+1} / C_level: the ledger
 * mult-sum over entries whose next step classifies as totally ramified.
 * Computed by aggregating sequence counts per origin, so it stays cheap at
 * every level the genus routines need.
 */
long long count_ramified(int level);

/* Closed-form count: ((level+2)/4 + 2) 2^(level/2) for even level,
 * (level/4 + 2) 2^((level+1)/2) for odd.  Independent cross-check. */
long long count_ramified_closed(int level);

enum class GenusMethod { Hurwitz, Closed };

/*
 * Genus of C_level, exact.  Hurwitz folds count_ramified through
 * g' = 2g - 1 + n starting from genus 0; Closed evaluates the explicit
 * case-split formula.  The two agree on every level.
 */
BigInt genus(int level, GenusMethod method);

} // namespace astower::rami
