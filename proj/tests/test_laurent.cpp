#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "astower/laurent.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <vector>

using namespace astower;
using namespace astower::laurent;

namespace {

const gf2m::FieldDescriptor& F4 = gf2m::field_new(2);

gf2m::FieldElement fe(int v) { return gf2m::element(F4, static_cast<std::uint32_t>(v)); }

std::map<int, int> pp_ints(const PrincipalPart& p) {
    std::map<int, int> out;
    for (const auto& [e, c] : p) out[e] = static_cast<int>(c.coeffs);
    return out;
}

int coeff_val(const LaurentSeries& s, int n) { return static_cast<int>(coeff(s, n).coeffs); }

/* All alternating sequences of the given length for one class (no trailing 0). */
std::vector<IndexSequence> alternating_seqs(int length, int cls) {
    std::vector<IndexSequence> out{{}};
    for (int n = 0; n < length; ++n) {
        std::vector<IndexSequence> next;
        bool unit = (n % 2) == cls;
        for (const auto& s : out) {
            if (unit) {
                auto t = s;
                t.push_back(1);
                next.push_back(t);
            } else {
                for (int v : {2, 3}) {
                    auto t = s;
                    t.push_back(v);
                    next.push_back(t);
                }
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<IndexSequence> zero_seqs(int i) {
    auto outs = alternating_seqs(i, i % 2);
    for (auto& s : outs) s.push_back(0);
    return outs;
}

} // namespace

TEST_CASE("series arithmetic fundamentals") {
    auto t = series_monomial(gf2m::one(F4), 1, 16);
    auto t2 = mul(t, t);
    CHECK(order(t2) == 2);
    CHECK(coeff_val(t2, 2) == 1);

    // (t + t^2)^2 = t^2 + t^4 exactly; precision doubles
    LaurentSeries s = add(t, t2);
    auto sq = frobenius_square(s);
    CHECK(sq.precision == 32);
    CHECK(coeff_val(sq, 2) == 1);
    CHECK(coeff_val(sq, 3) == 0);
    CHECK(coeff_val(sq, 4) == 1);

    // wp(s) = s^2 + s
    auto w = wp(s);
    CHECK(coeff_val(w, 1) == 1);
    CHECK(coeff_val(w, 2) == 0); // t^2 from square cancels t^2 from s
    CHECK(coeff_val(w, 4) == 1);
}

TEST_CASE("inverse window bookkeeping") {
    // s = t^2 + t^3, P=10: 1/s = t^-2 (1 + t + t^2 + ...) known on [-2, 6)
    auto s = add(series_monomial(fe(1), 2, 10), series_monomial(fe(1), 3, 10));
    auto v = inv(s);
    CHECK(v.precision == 6);
    for (int n = -2; n < 6; ++n) CHECK(coeff_val(v, n) == 1);
    CHECK_THROWS_AS(coeff(v, 6), std::out_of_range);
    // round trip on the common window
    auto prod = mul(s, v);
    CHECK(order(prod) == 0);
    CHECK(coeff_val(prod, 0) == 1);
    for (int n = 1; n < prod.precision; ++n) CHECK(coeff_val(prod, n) == 0);
    CHECK_THROWS_AS(inv(series_zero(F4, 8)), std::domain_error);
}

TEST_CASE("solve_wp returns the positive-order root") {
    auto c = series_monomial(fe(1), 2, 32); // c = t^2
    auto y = solve_wp(c);
    CHECK(order(y) == 2);
    auto back = wp(y);
    for (int n = order(back); n < 32; ++n)
        CHECK(coeff_val(back, n) == coeff_val(c, n));
    CHECK_THROWS_AS(solve_wp(series_constant(fe(1), 8)), std::invalid_argument);
}

TEST_CASE("chain expansion oracle values") {
    SUBCASE("m_0 is the local parameter") {
        auto ms = chain_expand({1}, 32);
        REQUIRE(ms.size() == 1);
        CHECK(order(ms[0]) == 1);
        CHECK(coeff_val(ms[0], 1) == 1);
    }

    SUBCASE("first expansion over the standard chain") {
        auto ms = chain_expand({1, 2}, 32);
        REQUIRE(ms.size() == 2);
        // m_1 = t^2 + t^3 + t^5 + t^7 + t^8 + ... (no t^4, t^6)
        CHECK(order(ms[1]) == 2);
        CHECK(coeff_val(ms[1], 2) == 1);
        CHECK(coeff_val(ms[1], 3) == 1);
        CHECK(coeff_val(ms[1], 4) == 0);
        CHECK(coeff_val(ms[1], 5) == 1);
        CHECK(coeff_val(ms[1], 6) == 0);
        CHECK(coeff_val(ms[1], 7) == 1);
        CHECK(coeff_val(ms[1], 8) == 1);
    }

    SUBCASE("second-step comparison: 1/m_2 - a_1/m_1 is regular") {
        auto ms = chain_expand({1, 2, 1}, 64);
        auto diff = add(inv(ms[2]), mul(series_constant(fe(2), 64), inv(ms[1])));
        CHECK(order(diff) >= 0);
    }

    SUBCASE("odd-step shape: m_2 = m_1^2 + m_1^3 + higher on the mirror chain") {
        auto ms = chain_expand({2, 1, 2}, 64);
        auto expect = add(frobenius_square(ms[1]), mul(ms[1], frobenius_square(ms[1])));
        int upto = std::min(3 * order(ms[1]) + 1, std::min(ms[2].precision, expect.precision));
        for (int n = order(ms[2]); n < upto; ++n)
            CHECK(coeff_val(ms[2], n) == coeff_val(expect, n));
    }

    SUBCASE("orders follow the halving pattern") {
        for (int cls : {0, 1}) {
            for (const auto& seq : alternating_seqs(7, cls)) {
                auto ms = chain_expand(seq, 128);
                for (std::size_t j = 0; j < ms.size(); ++j)
                    CHECK(order(ms[j]) ==
                          f_top_exponent(static_cast<int>(j), cls));
            }
        }
    }

    SUBCASE("defining relation holds to precision") {
        for (const auto& seq :
             {IndexSequence{1, 2, 1, 3}, IndexSequence{3, 1, 2, 1}, IndexSequence{1, 3, 1, 2, 1}}) {
            auto ms = chain_expand(seq, 64);
            for (std::size_t j = 1; j < ms.size(); ++j) {
                auto shifted = add(ms[j - 1], series_constant(fe(seq[j - 1]), 64));
                auto rhs = add(add(shifted, series_constant(fe(1), 64)), inv(shifted));
                if (gf2m::wp(fe(seq[j])).coeffs != 0)
                    rhs = add(rhs, series_constant(gf2m::wp(fe(seq[j])), 64));
                auto lhs = wp(ms[j]);
                int upto = std::min(lhs.precision, rhs.precision);
                for (int n = std::min(order(lhs), order(rhs)); n < upto; ++n)
                    CHECK(coeff_val(lhs, n) == coeff_val(rhs, n));
            }
        }
    }

    SUBCASE("rejects malformed sequences") {
        CHECK_THROWS_AS(chain_expand({0, 1}, 32), std::invalid_argument);
        CHECK_THROWS_AS(chain_expand({1, 1}, 32), std::invalid_argument);
        CHECK_THROWS_AS(chain_expand({2, 2}, 32), std::invalid_argument);
        CHECK_THROWS_AS(chain_expand({1, 2, 2}, 32), std::invalid_argument);
    }
}

TEST_CASE("principal part recursion oracle values") {
    CHECK(pp_ints(principal_F({1, 2}, 0)) == std::map<int, int>{{1, 1}});
    CHECK(pp_ints(principal_F({1, 2}, 1)) == std::map<int, int>{{1, 1}, {2, 1}});
    CHECK(pp_ints(principal_F({1, 2, 1}, 2)) == std::map<int, int>{{1, 2}, {2, 2}});
    // mirror chain: F_1 = a_0/t
    CHECK(pp_ints(principal_F({2, 1}, 1)) == std::map<int, int>{{1, 2}});
    CHECK(pp_ints(principal_F({3, 1}, 1)) == std::map<int, int>{{1, 3}});
}

TEST_CASE("principal parts match the series expansions") {
    for (int cls : {0, 1}) {
        for (const auto& seq : alternating_seqs(7, cls)) {
            auto ms = chain_expand(seq, 128);
            for (int j = 0; j < static_cast<int>(ms.size()); ++j) {
                auto expect = principal_F(seq, j);
                auto got = principal_part(inv(ms[static_cast<std::size_t>(j)]));
                CHECK(pp_ints(got) == pp_ints(expect));
                // 2-linearized shape
                int top = 0;
                for (const auto& [e, c] : expect) {
                    CHECK((e & (e - 1)) == 0);
                    CHECK(c.coeffs != 0);
                    CHECK(c.coeffs <= 3);
                    top = std::max(top, e);
                }
                CHECK(top == f_top_exponent(j, cls));
            }
        }
    }
}

TEST_CASE("head reduction oracle values") {
    SUBCASE("single slot, lowest level") {
        BTable b;
        b[2] = fe(1);
        auto r = head_reduce(b, {1, 2});
        CHECK(r.bstar == 1);
        REQUIRE(r.lower.size() == 1);
        CHECK(static_cast<int>(r.lower.at(0).coeffs) == 3); // rho^2
        CHECK(pp_ints(r.residual) == std::map<int, int>{{1, 1}});
    }

    SUBCASE("empty input") {
        auto r = head_reduce({}, {1, 2});
        CHECK(r.lower.empty());
        CHECK(r.bstar == 0);
        CHECK(r.residual.empty());
    }

    SUBCASE("frozen cascade tables on the level-six chain") {
        IndexSequence seq{1, 2, 1, 2, 1, 2, 0};
        BTable b;
        b[6] = fe(1);
        auto r1 = head_reduce(b, seq);
        CHECK(r1.bstar == 1);
        CHECK(pp_ints(r1.lower) == std::map<int, int>{{0, 3}, {2, 3}, {4, 3}});
        BTable head2 = r1.lower;
        head2.erase(0);
        auto r2 = head_reduce(head2, seq);
        CHECK(r2.bstar == 0);
        CHECK(pp_ints(r2.lower) == std::map<int, int>{{0, 1}, {2, 1}});
        BTable head3 = r2.lower;
        head3.erase(0);
        auto r3 = head_reduce(head3, seq);
        CHECK(r3.bstar == 1);
        CHECK(pp_ints(r3.lower) == std::map<int, int>{{0, 3}});
    }

    SUBCASE("rejects wrong-parity slots") {
        BTable b;
        b[3] = fe(1);
        CHECK_THROWS_AS(head_reduce(b, {1, 2, 1}), std::invalid_argument);
        BTable c;
        c[0] = fe(1);
        CHECK_THROWS_AS(head_reduce(c, {1, 2}), std::invalid_argument);
    }
}

TEST_CASE("head reduction identity is exact") {
    auto check_identity = [](const BTable& b, const IndexSequence& seq) {
        auto r = head_reduce(b, seq);
        PrincipalPart lhs, inner;
        for (const auto& [slot, c] : b)
            lhs = pp_add(lhs, pp_scale(c, principal_F(seq, slot)));
        for (const auto& [slot, c] : r.lower)
            inner = pp_add(inner, pp_scale(c, principal_F(seq, slot)));
        PrincipalPart rhs = pp_add(pp_wp(inner), r.residual);
        CHECK(pp_ints(lhs) == pp_ints(rhs));
        CHECK((r.bstar == 0 || r.bstar == 1));
    };

    SUBCASE("two slots on the level-four chain") {
        BTable b;
        b[2] = fe(1);
        b[4] = fe(1);
        check_identity(b, {1, 2, 1, 2, 0});
    }

    SUBCASE("exhaustive over small tables, both classes") {
        for (int c2 = 0; c2 < 4; ++c2) {
            for (int c4 = 0; c4 < 4; ++c4) {
                BTable b;
                if (c2) b[2] = fe(c2);
                if (c4) b[4] = fe(c4);
                for (const auto& seq : zero_seqs(4)) check_identity(b, seq);
            }
        }
        for (int c3 = 1; c3 < 4; ++c3) {
            BTable b;
            b[3] = fe(c3);
            for (const auto& seq : zero_seqs(3)) check_identity(b, seq);
        }
    }

    SUBCASE("randomized tall tables") {
        std::mt19937 rng(12345);
        for (int trial = 0; trial < 300; ++trial) {
            int top = 7 + static_cast<int>(rng() % 2);
            int cls = top % 2; // zero sequences pin the class to the level parity
            auto seqs = zero_seqs(top);
            const auto& seq = seqs[rng() % seqs.size()];
            BTable b;
            for (int slot = cls + 2; slot <= top; slot += 2) {
                int v = static_cast<int>(rng() % 4);
                if (v) b[slot] = fe(v);
            }
            check_identity(b, seq);
        }
    }
}

TEST_CASE("symbolic classifier frozen runs") {
    using M = std::map<int, int>;

    SUBCASE("level two standard chain") {
        IndexSequence seq{1, 2, 0};
        auto r0 = classify_step_symbolic(seq, 0);
        CHECK(r0.kind == StepKind::TotallyRamified);
        CHECK(r0.contribution == 2);
        CHECK(r0.ord == -2);
        CHECK(r0.fslots == M{{0, 3}});
        CHECK(r0.symcoef == M{{1, 1}});
        auto r1 = classify_step_symbolic(seq, 1);
        CHECK(r1.kind == StepKind::Unramified);
        CHECK(r1.contribution == 0);
        CHECK(r1.ord == -1);
        CHECK(r1.fslots.empty());
        CHECK(r1.symcoef == M{{1, 2}});
        auto r2 = classify_step_symbolic(seq, 2);
        CHECK(r2.kind == StepKind::TotallyRamified);
        CHECK(r2.ord == -1);
        CHECK(r2.symcoef == M{{2, 1}});
    }

    SUBCASE("level four standard chain") {
        IndexSequence seq{1, 2, 1, 2, 0};
        auto r0 = classify_step_symbolic(seq, 0);
        CHECK(r0.kind == StepKind::TotallyRamified);
        CHECK(r0.ord == -4);
        CHECK(r0.fslots == M{{0, 3}, {2, 3}});
        CHECK(r0.symcoef == M{{1, 1}});
        auto r1 = classify_step_symbolic(seq, 1);
        CHECK(r1.kind == StepKind::Unramified);
        CHECK(r1.ord == -2);
        CHECK(r1.fslots == M{{0, 1}});
        CHECK(r1.symcoef == M{{1, 2}});
        auto r2 = classify_step_symbolic(seq, 2);
        CHECK(r2.kind == StepKind::TotallyRamified);
        CHECK(r2.ord == -2);
        CHECK(r2.fslots.empty());
        CHECK(r2.symcoef == M{{1, 1}, {2, 1}});
        auto r3 = classify_step_symbolic(seq, 3);
        CHECK(r3.kind == StepKind::Unramified);
        CHECK(r3.ord == -1);
        CHECK(r3.symcoef == M{{2, 2}});
        auto r4 = classify_step_symbolic(seq, 4);
        CHECK(r4.kind == StepKind::TotallyRamified);
        CHECK(r4.ord == -1);
        CHECK(r4.symcoef == M{{3, 1}});
    }

    SUBCASE("level one mirror chain ramifies everywhere") {
        for (int a0 : {2, 3}) {
            IndexSequence seq{a0, 0};
            for (int t = 0; t <= 1; ++t) {
                auto r = classify_step_symbolic(seq, t);
                CHECK(r.kind == StepKind::TotallyRamified);
                CHECK(r.ord == -1);
            }
        }
    }

    SUBCASE("level three mirror chain") {
        IndexSequence seq{2, 1, 3, 0};
        auto r0 = classify_step_symbolic(seq, 0);
        CHECK(r0.kind == StepKind::TotallyRamified);
        CHECK(r0.ord == -2);
        CHECK(r0.fslots == M{{1, 2}});
        auto r1 = classify_step_symbolic(seq, 1);
        CHECK(r1.kind == StepKind::Unramified);
        CHECK(r1.ord == -1);
        CHECK(r1.symcoef == M{{1, 3}});
        auto r2 = classify_step_symbolic(seq, 2);
        CHECK(r2.kind == StepKind::TotallyRamified);
        CHECK(r2.ord == -1);
        auto r3 = classify_step_symbolic(seq, 3);
        CHECK(r3.kind == StepKind::TotallyRamified);
        CHECK(r3.ord == -1);
    }
}

TEST_CASE("classifier matches the parity law and the order telescope") {
    for (int i = 1; i <= 8; ++i) {
        for (const auto& seq : zero_seqs(i)) {
            int cls = (i % 2 == 0) ? 0 : 1;
            int threshold = (cls == 0) ? i : i - 1;
            for (int t = 0; t <= i; ++t) {
                auto r = classify_step_symbolic(seq, t);
                bool want_ram = (t < threshold) ? (t % 2 == 0) : true;
                CHECK((r.kind == StepKind::TotallyRamified) == want_ram);
                int expo = std::max(0, i / 2 - (t + 1) / 2);
                CHECK(r.ord == -(1ll << expo));
            }
        }
    }
}

TEST_CASE("classifier input validation") {
    CHECK_THROWS_AS(classify_step_symbolic({1, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(classify_step_symbolic({1, 2, 0}, 3), std::invalid_argument);
    CHECK_THROWS_AS(classify_step_symbolic({1, 2, 0}, -1), std::invalid_argument);
    CHECK_THROWS_AS(classify_step_symbolic({2, 1, 0}, 0), std::invalid_argument);
}
