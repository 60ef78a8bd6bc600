#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "astower/rami.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace astower;
using namespace astower::rami;
using laurent::StepKind;

TEST_CASE("zero sequence enumeration") {
    CHECK(zero_sequences(1) == std::vector<IndexSequence>{{2, 0}, {3, 0}});
    CHECK(zero_sequences(2) == std::vector<IndexSequence>{{1, 2, 0}, {1, 3, 0}});

    auto s4 = zero_sequences(4);
    CHECK(s4.size() == 4);
    for (const auto& s : s4) {
        CHECK(s[0] == 1);
        CHECK(s[2] == 1);
        CHECK(s[4] == 0);
    }

    for (int i = 1; i <= 12; ++i) {
        auto seqs = zero_sequences(i);
        CHECK(seqs.size() == (1u << ((i + 1) / 2)));
        CHECK(std::is_sorted(seqs.begin(), seqs.end()));
        CHECK(std::set<IndexSequence>(seqs.begin(), seqs.end()).size() == seqs.size());
        for (auto s : seqs) {
            s.push_back(kInfty); // boundary tails stay admissible
            s.push_back(kInfty);
            CHECK(sequence_ok(s));
        }
    }

    CHECK_THROWS_AS(zero_sequences(0), std::invalid_argument);
    CHECK_THROWS_AS(zero_sequences(-3), std::invalid_argument);
}

TEST_CASE("closed step classification") {
    CHECK(classify_closed(2, 0, ChainClass::One) == StepKind::TotallyRamified);
    CHECK(classify_closed(2, 1, ChainClass::One) == StepKind::Unramified);
    CHECK(classify_closed(1, 5, ChainClass::Rho) == StepKind::TotallyRamified);

    // level 1 chains ramify at every step: the interior range is empty
    for (int j = 0; j <= 6; ++j)
        CHECK(classify_closed(1, j, ChainClass::Rho) == StepKind::TotallyRamified);

    // the even steps below the level ramify, odd ones split, the far tail ramifies
    for (int j = 0; j <= 14; ++j) {
        CHECK((classify_closed(6, j, ChainClass::One) == StepKind::TotallyRamified) ==
              (j < 6 ? (j % 2 == 0) : true));
        CHECK((classify_closed(7, j, ChainClass::Rho) == StepKind::TotallyRamified) ==
              (j < 6 ? (j % 2 == 0) : true));
    }

    for (int j = 0; j <= 5; ++j)
        CHECK(classify_closed(1, j, ChainClass::Special) == StepKind::TotallyRamified);

    CHECK_THROWS_AS(classify_closed(0, 0, ChainClass::One), std::invalid_argument);
    CHECK_THROWS_AS(classify_closed(2, -1, ChainClass::One), std::invalid_argument);
}

TEST_CASE("ramified point counts") {
    CHECK(count_ramified(0) == 2);
    CHECK(count_ramified(1) == 4);
    CHECK(count_ramified(2) == 6);
    CHECK(count_ramified(4) == 12);

    for (int i = 1; i <= 30; ++i) CHECK(count_ramified(i) == count_ramified_closed(i));

    // the ledger mult-sum is what the aggregate computes
    for (int level = 0; level <= 12; ++level) {
        long long n = 0;
        for (const auto& e : ledger(level))
            if (classify_closed(e.origin_i, e.tail_j, e.a0_class) == StepKind::TotallyRamified)
                n += e.mult;
        CHECK(n == count_ramified(level));
    }
}

TEST_CASE("ledger composition") {
    auto l4 = ledger(4);
    // origins 1..4 contribute 2,2,4,4 sequences plus the two specials
    CHECK(l4.size() == 2 + 2 + 4 + 4 + 2);
    long long total = 0;
    for (const auto& e : l4) {
        CHECK(e.mult >= 1);
        if (e.a0_class == ChainClass::Special) {
            CHECK(e.mult == 1);
            CHECK(e.tail_j == 4);
        } else {
            CHECK(e.origin_i + e.tail_j == 4);
            CHECK(class_of_level(e.origin_i) == e.a0_class);
        }
        total += e.mult;
    }
    // boundary points of C_4: specials 2, origin 4: 4, origin 3: 4,
    // origin 2: 2 sequences doubled once, origin 1: 2
    CHECK(total == 2 + 4 + 4 + 4 + 2);
}

TEST_CASE("genus both ways") {
    const long long expect[] = {0, 1, 5, 15, 37, 85, 193, 417, 881, 1825, 3777};
    for (int i = 0; i <= 10; ++i) {
        CHECK(genus(i, GenusMethod::Hurwitz) == expect[i]);
        CHECK(genus(i, GenusMethod::Closed) == expect[i]);
    }
    for (int i = 0; i <= 50; ++i)
        CHECK(genus(i, GenusMethod::Hurwitz) == genus(i, GenusMethod::Closed));
    for (int i = 2; i <= 40; ++i)
        CHECK(genus(i + 1, GenusMethod::Closed) > 2 * genus(i, GenusMethod::Closed) - 2);
    CHECK_THROWS_AS(genus(-1, GenusMethod::Hurwitz), std::invalid_argument);
}

TEST_CASE("closed classification matches the symbolic machine") {
    for (int i = 1; i <= 8; ++i) {
        const ChainClass cls = class_of_level(i);
        for (const auto& seq : zero_sequences(i)) {
            for (int t = 0; t <= i; ++t) {
                auto sym = laurent::classify_step_symbolic(seq, t);
                CHECK(sym.kind == classify_closed(i, t, cls));
            }
        }
    }
}
