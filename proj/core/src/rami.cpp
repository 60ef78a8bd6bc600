#include "astower/rami.hpp"

#include <stdexcept>

namespace astower::rami {

namespace {

bool ramified(int origin_i, int tail_j, ChainClass cls) {
    return classify_closed(origin_i, tail_j, cls) == laurent::StepKind::TotallyRamified;
}

/* Geometric points above one zero-sequence class after tail_j infinity steps:
 * doubles at each unramified step below tail_j. */
long long class_mult(int origin_i, int tail_j, ChainClass cls) {
    long long mult = 1;
    for (int j = 0; j < tail_j; ++j)
        if (!ramified(origin_i, j, cls)) mult *= 2;
    return mult;
}

long long seq_count(int origin_i) { return 1ll << ((origin_i + 1) / 2); }

} // namespace

std::vector<IndexSequence> zero_sequences(int i) {
    if (i < 1) throw std::invalid_argument("zero sequences exist from level 1 on");
    if (i > 40) throw std::invalid_argument("sequence enumeration level too large");
    std::vector<IndexSequence> out{{}};
    for (int p = 0; p <= i; ++p) {
        const int dist = i - p;
        if (dist == 0) {
            for (auto& s : out) s.push_back(0);
        } else if (dist % 2 == 0) {
            for (auto& s : out) s.push_back(1);
        } else {
            std::vector<IndexSequence> next;
            next.reserve(out.size() * 2);
            for (const auto& s : out) {
                for (int v : {2, 3}) {
                    auto t = s;
                    t.push_back(v);
                    next.push_back(std::move(t));
                }
            }
            out = std::move(next);
        }
    }
    return out;
}

laurent::StepKind classify_closed(int origin_i, int tail_j, ChainClass a0_class) {
    if (tail_j < 0) throw std::invalid_argument("negative tail length");
    if (a0_class == ChainClass::Special) return laurent::StepKind::TotallyRamified;
    if (origin_i < 1) throw std::invalid_argument("zero sequences exist from level 1 on");
    const bool even = tail_j % 2 == 0;
    const bool ram = (a0_class == ChainClass::One)
                         ? (even && tail_j <= origin_i - 2) || tail_j >= origin_i
                         : (even && tail_j <= origin_i - 3) || tail_j >= origin_i - 1;
    return ram ? laurent::StepKind::TotallyRamified : laurent::StepKind::Unramified;
}

std::vector<LedgerEntry> ledger(int level) {
    if (level < 0) throw std::invalid_argument("negative level");
    std::vector<LedgerEntry> out;
    for (int origin = 1; origin <= level; ++origin) {
        const ChainClass cls = class_of_level(origin);
        const int tail = level - origin;
        const long long mult = class_mult(origin, tail, cls);
        const long long copies = seq_count(origin);
        for (long long c = 0; c < copies; ++c) out.push_back({origin, cls, tail, mult});
    }
    out.push_back({0, ChainClass::Special, level, 1});
    out.push_back({0, ChainClass::Special, level, 1});
    return out;
}

long long count_ramified(int level) {
    if (level < 0) throw std::invalid_argument("negative level");
    if (level > 60) throw std::overflow_error("ramified count exceeds the integer range");
    long long n = 2; // the two special chains ramify at every level
    for (int origin = 1; origin <= level; ++origin) {
        const ChainClass cls = class_of_level(origin);
        const int tail = level - origin;
        if (!ramified(origin, tail, cls)) continue;
        n += seq_count(origin) * class_mult(origin, tail, cls);
    }
    return n;
}

long long count_ramified_closed(int level) {
    if (level < 1) throw std::invalid_argument("closed count defined from level 1 on");
    if (level > 60) throw std::overflow_error("ramified count exceeds the integer range");
    if (level % 2 == 0) return ((level + 2) / 4 + 2) * (1ll << (level / 2));
    return (level / 4 + 2) * (1ll << ((level + 1) / 2));
}

BigInt genus(int level, GenusMethod method) {
    if (level < 0) throw std::invalid_argument("negative level");
    if (method == GenusMethod::Hurwitz) {
        BigInt g = 0;
        for (int j = 0; j < level; ++j) g = 2 * g - 1 + count_ramified(j);
        return g;
    }
    const BigInt lead = (BigInt(1) << (level + 2)) + 1;
    if (level % 2 == 0)
        return lead - BigInt((level + 10) / 2) * (BigInt(1) << (level / 2));
    return lead - BigInt((level + 2 * (level / 4) + 15) / 2) * (BigInt(1) << ((level - 1) / 2));
}

} // namespace astower::rami
