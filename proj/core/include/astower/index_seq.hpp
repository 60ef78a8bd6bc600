#pragma once

#include <vector>

namespace astower {

/*
 * Index sequences name boundary points of the tower: entries are coordinate
 * values 0, 1, rho, rho^2 (encoded 0,1,2,3 in the GF(4) polynomial basis)
 * plus the infinity marker below.  Consecutive entries must obey the
 * successor table of the recursive equation y^2 + y = x + 1 + 1/x.
 */
using IndexSequence = std::vector<int>;

inline constexpr int kInfty = -1;

/* Successor table: inf -> inf; 0 -> inf; 1 -> {rho, rho^2}; rho, rho^2 -> {0, 1}. */
inline bool successor_ok(int prev, int next) {
    switch (prev) {
        case kInfty: return next == kInfty;
        case 0: return next == kInfty;
        case 1: return next == 2 || next == 3;
        case 2:
        case 3: return next == 0 || next == 1;
        default: return false;
    }
}

inline bool sequence_ok(const IndexSequence& seq) {
    if (seq.empty()) return false;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        int v = seq[n];
        if (v != kInfty && (v < 0 || v > 3)) return false;
        if (n > 0 && !successor_ok(seq[n - 1], v)) return false;
    }
    return true;
}

} // namespace astower
