#include "astower/points.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace astower::points {

namespace {

void check_domain(int i, int k) {
    if (i < 1) throw std::invalid_argument("chain length starts at level 1");
    if (k < 1 || k > 24) throw std::invalid_argument("extension degree out of range");
}

/* Successor pairs of every nonzero field element: succ[v] = {r, r+1} as bit
 * patterns when x = v admits a next coordinate, marked by ok[v]. */
struct SuccessorTable {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> succ;
    std::vector<bool> ok;
};

SuccessorTable successor_table(const gf2m::FieldDescriptor& F) {
    const std::uint32_t size = 1u << F.m;
    SuccessorTable t;
    t.succ.resize(size);
    t.ok.assign(size, false);
    const auto one = gf2m::one(F);
    for (std::uint32_t v = 1; v < size; ++v) {
        const auto x = gf2m::element(F, v);
        const auto c = gf2m::add(gf2m::add(x, one), gf2m::inv(x));
        const auto roots = gf2m::solve_artin_schreier(c);
        if (!roots) continue;
        t.succ[v] = {roots->first.coeffs, roots->second.coeffs};
        t.ok[v] = true;
    }
    return t;
}

} // namespace

long long affine_count(int i, int k) {
    check_domain(i, k);
    const auto& F = gf2m::field_new(k);
    const auto table = successor_table(F);
    const std::uint32_t size = 1u << k;
    ValueDistribution d{F, std::vector<long long>(size, 1)};
    for (int step = 1; step <= i; ++step) {
        std::vector<long long> next(size, 0);
        for (std::uint32_t v = 1; v < size; ++v) {
            if (d.counts[v] == 0 || !table.ok[v]) continue;
            next[table.succ[v].first] += d.counts[v];
            next[table.succ[v].second] += d.counts[v];
        }
        d.counts = std::move(next);
    }
    return std::accumulate(d.counts.begin(), d.counts.end(), 0ll);
}

long long affine_count_naive(int i, int k) {
    check_domain(i, k);
    const auto& F = gf2m::field_new(k);
    const auto one = gf2m::one(F);
    const std::uint32_t size = 1u << k;
    long long total = 0;
    // chains grow from every x_0; interior coordinates must stay invertible
    struct Frame {
        std::uint32_t v;
        int depth;
    };
    std::vector<Frame> stack;
    for (std::uint32_t v0 = 0; v0 < size; ++v0) stack.push_back({v0, 0});
    while (!stack.empty()) {
        auto [v, depth] = stack.back();
        stack.pop_back();
        if (depth == i) {
            ++total;
            continue;
        }
        if (v == 0) continue;
        const auto x = gf2m::element(F, v);
        const auto c = gf2m::add(gf2m::add(x, one), gf2m::inv(x));
        const auto roots = gf2m::solve_artin_schreier(c);
        if (!roots) continue;
        stack.push_back({roots->first.coeffs, depth + 1});
        stack.push_back({roots->second.coeffs, depth + 1});
    }
    return total;
}

SplitReport split_check(int k) {
    if (k < 1 || k > 24) throw std::invalid_argument("extension degree out of range");
    SplitReport rep;
    rep.k = k;
    if (k == 1) return rep; // F_2 - F_2 is empty
    rep.applicable = true;

    const auto& F = gf2m::field_new(k);
    const auto one = gf2m::one(F);
    const std::uint32_t size = 1u << k;
    auto outside_prime = [](std::uint32_t v) { return v > 1; };

    std::set<std::uint32_t> orbit;
    {
        auto g = gf2m::element(F, F.generator);
        for (int j = 0; j < k; ++j) {
            orbit.insert(g.coeffs);
            g = gf2m::mul(g, g);
        }
    }

    std::set<std::uint32_t> forward, wp_image, successors;
    bool pairs_ok = true;
    for (std::uint32_t v = 2; v < size; ++v) {
        const auto x = gf2m::element(F, v);
        forward.insert(gf2m::add(gf2m::add(x, one), gf2m::inv(x)).coeffs);
        wp_image.insert(gf2m::wp(x).coeffs);
        const auto roots = gf2m::solve_artin_schreier(
            gf2m::add(gf2m::add(x, one), gf2m::inv(x)));
        if (!roots || roots->first.coeffs == roots->second.coeffs ||
            !outside_prime(roots->first.coeffs) || !outside_prime(roots->second.coeffs)) {
            pairs_ok = false;
            if (roots) {
                successors.insert(roots->first.coeffs);
                successors.insert(roots->second.coeffs);
            }
            continue;
        }
        successors.insert(roots->first.coeffs);
        successors.insert(roots->second.coeffs);
    }

    std::set<std::uint32_t> domain;
    for (std::uint32_t v = 2; v < size; ++v) domain.insert(v);

    rep.forward_image = forward == orbit;
    rep.wp_image = wp_image == orbit;
    rep.successor_pairs = pairs_ok;
    rep.sweep = successors == domain;
    return rep;
}

F8Count rational_count_f8(int i) {
    if (i < 1) throw std::invalid_argument("counts start at level 1");
    if (i > 59) throw std::overflow_error("count exceeds the integer range");
    if (i > 20) return {6 * (1ll << i) + 2, false};
    return {affine_count(i, 3) + 2, true};
}

bool ratio_below_dv(long long n8, const BigInt& g) {
    if (g <= 0) throw std::domain_error("genus must be positive");
    const BigInt s = BigInt(n8) + g;
    return s * s < 8 * g * g;
}

std::string format_ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) return "inf";
    if (num < 0 || den < 0) throw std::domain_error("ratio must be nonnegative");
    const BigInt scale = 1000000;
    BigInt q = num * scale / den;
    const BigInt r = num * scale % den;
    const BigInt twice = 2 * r;
    if (twice > den || (twice == den && (q % 2) != 0)) ++q;
    const BigInt whole = q / scale;
    std::string frac = BigInt(q % scale).str();
    frac.insert(0, 6 - frac.size(), '0');
    return whole.str() + "." + frac;
}

AsymptoticsReport asymptotics_table(int i_max) {
    if (i_max < 0) throw std::invalid_argument("negative level");
    AsymptoticsReport rep;
    rep.dv_bound = std::sqrt(8.0) - 1.0;
    rep.zink_num = 3; // 2(p^2-1)/(p+2) at p = 2
    rep.zink_den = 2;
    rep.kummer_num = 1; // 2/(q-2) at q = 8
    rep.kummer_den = 3;
    rep.limit_num = 3; // leading terms: counts grow as 6 2^i, genus as 2^{i+2}
    rep.limit_den = 2;
    rep.limit_equals_zink =
        rep.limit_num * rep.zink_den == rep.zink_num * rep.limit_den;

    if (i_max == 0) {
        TowerStats row;
        row.i = 0;
        row.n_i = rami::count_ramified(0);
        row.genus_hurwitz = 0;
        row.genus_closed = 0;
        row.n8 = 9; // the projective line over F_8
        row.n8_enumerated = true;
        row.ratio_num = 9; // kept unreduced over the zero genus
        row.ratio_den = 0;
        row.ratio_float = format_ratio(row.ratio_num, row.ratio_den);
        rep.rows.push_back(std::move(row));
        return rep;
    }

    for (int i = 1; i <= i_max; ++i) {
        TowerStats row;
        row.i = i;
        row.n_i = rami::count_ramified(i);
        row.genus_hurwitz = rami::genus(i, rami::GenusMethod::Hurwitz);
        row.genus_closed = rami::genus(i, rami::GenusMethod::Closed);
        const auto n8 = rational_count_f8(i);
        row.n8 = n8.value;
        row.n8_enumerated = n8.enumerated;
        const BigInt g = row.genus_closed;
        BigInt num = n8.value, den = g;
        const BigInt common = boost::multiprecision::gcd(num, den);
        if (common > 1) {
            num /= common;
            den /= common;
        }
        row.ratio_num = num;
        row.ratio_den = den;
        row.ratio_float = format_ratio(num, den);
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace astower::points
