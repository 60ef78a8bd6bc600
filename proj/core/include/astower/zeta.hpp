/*
 * L-polynomial reconstruction from point counts: an independent genus oracle
 * for the low tower levels.  Counts over extension fields determine the
 * numerator of the zeta function through Newton's identities; the functional
 * equation, the root magnitudes, and count round trips certify consistency.
 */
#pragma once

#include "astower/rami.hpp"

#include <vector>

namespace astower::zeta {

using rami::BigInt;

/* Numerator of the zeta function: coeffs[0..2g] with coeffs[0] = 1 and
 * coeffs[2g-i] = q^{g-i} coeffs[i]. */
struct LPolynomial {
    int q = 2;
    int g = 0;
    std::vector<BigInt> coeffs;
};

/*
 * Builds the L-polynomial of a genus-g curve over F_q from the point counts
 * N_1..N_g (extra entries ignored): power sums q^k + 1 - N_k feed Newton's
 * identities for the lower half, the functional equation fills the upper.
 * Throws domain_error when an intermediate coefficient fails integrality,
 * which signals counts inconsistent with the stated genus.
 */
LPolynomial l_polynomial_from_counts(int q, int g, const std::vector<long long>& counts);

/* Point count over F_{q^k} implied by the polynomial, any k >= 1. */
BigInt predicted_count(const LPolynomial& lp, int k);

/* Magnitudes of the inverse roots (numerical); all should equal sqrt(q). */
std::vector<double> inverse_root_magnitudes(const LPolynomial& lp);

/* Boundary points of C_level rational over F_{2^k}, level 1 or 2: the two
 * chains through 0 and infinity always, the two level-2 classes with GF(4)
 * coordinates exactly when GF(4) embeds. */
long long boundary_count(int level, int k);

/*
 * Full consistency report for one tower level: enumerated counts N_1..N_2g,
 * the reconstructed polynomial, and each verification verdict.
 */
struct CrosscheckReport {
    int level = 0;
    int q = 2;
    int g = 0; // genus used for the reconstruction
    LPolynomial lpoly;
    std::vector<long long> counts;    // N_1..N_2g by enumeration
    std::vector<BigInt> predicted;    // N_{g+1}..N_{2g} from the polynomial
    std::vector<double> roots_abs;
    bool integral = false;
    bool functional_equation = false;
    bool roots_on_circle = false;  // within 1e-9 of sqrt(q)
    bool counts_reproduced = false;
    bool predictions_match = false;
    bool hasse_weil = false;

    bool passed() const {
        return integral && functional_equation && roots_on_circle && counts_reproduced &&
               predictions_match && hasse_weil;
    }
};

/* Crosscheck with the ledger genus of the level (1 or 2). */
CrosscheckReport genus_crosscheck(int level);

/* Same pipeline with an arbitrary genus; lets callers demonstrate that a
 * wrong genus cannot pass (negative control). */
CrosscheckReport genus_crosscheck_forced(int level, int forced_g);

} // namespace astower::zeta
