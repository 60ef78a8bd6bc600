#include "astower/laurent.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace astower::laurent {

namespace {

const FieldDescriptor& f4() {
    static const FieldDescriptor f = gf2m::field_new(2);
    return f;
}

FieldElement fe4(int v) { return gf2m::element(f4(), static_cast<std::uint32_t>(v)); }

/* wp on a field scalar: c^2 + c. */
FieldElement wp_scalar(const FieldElement& c) { return gf2m::wp(c); }

void require_same_field(const LaurentSeries& a, const LaurentSeries& b) {
    if (!(a.field == b.field))
        throw std::invalid_argument("series belong to different fields");
}

LaurentSeries make(const FieldDescriptor& field, int min_order, int precision) {
    if (min_order > precision)
        throw std::logic_error("series window inverted");
    LaurentSeries s;
    s.field = field;
    s.min_order = min_order;
    s.precision = precision;
    s.coeffs.assign(static_cast<std::size_t>(precision - min_order), gf2m::zero(field));
    return s;
}

/*
 * Validates the alternating shape shared by all expansion entry points:
 * a_0 != 0 and positions alternate between 1 and GF(4)-GF(2), the phase set
 * by a_0; a single trailing 0 is permitted (a zero sequence).  Returns the
 * interior length (sequence length minus the trailing zero, if any).
 */
std::size_t validate_alternating(const IndexSequence& seq) {
    if (seq.empty()) throw std::invalid_argument("empty index sequence");
    std::size_t interior = seq.size();
    if (seq.back() == 0 && seq.size() > 1) --interior;
    if (interior == 0 || seq[0] == 0 || seq[0] == kInfty)
        throw std::invalid_argument("sequence must start with a nonzero finite value");
    const int cls = (seq[0] == 1) ? 0 : 1;
    for (std::size_t n = 0; n < interior; ++n) {
        int v = seq[n];
        bool want_unit = (static_cast<int>(n) % 2) == cls;
        if (want_unit ? (v != 1) : (v != 2 && v != 3))
            throw std::invalid_argument("sequence violates the alternation pattern");
    }
    if (interior < seq.size() && (seq[interior - 1] != 2 && seq[interior - 1] != 3))
        throw std::invalid_argument("zero entry must follow a non-prime-field value");
    return interior;
}

} // namespace

LaurentSeries series_zero(const FieldDescriptor& field, int precision) {
    return make(field, precision, precision);
}

LaurentSeries series_monomial(const FieldElement& c, int ord, int precision) {
    if (ord >= precision)
        throw std::invalid_argument("monomial order at or beyond precision");
    LaurentSeries s = make(c.field, ord, precision);
    s.coeffs[0] = c;
    return s;
}

LaurentSeries series_constant(const FieldElement& c, int precision) {
    return series_monomial(c, 0, precision);
}

int order(const LaurentSeries& s) {
    for (std::size_t n = 0; n < s.coeffs.size(); ++n)
        if (s.coeffs[n].coeffs != 0) return s.min_order + static_cast<int>(n);
    return s.precision;
}

FieldElement coeff(const LaurentSeries& s, int n) {
    if (n >= s.precision)
        throw std::out_of_range("coefficient beyond working precision");
    if (n < s.min_order) return gf2m::zero(s.field);
    return s.coeffs[static_cast<std::size_t>(n - s.min_order)];
}

LaurentSeries truncate(const LaurentSeries& s, int new_precision) {
    if (new_precision >= s.precision) return s;
    LaurentSeries out = s;
    out.precision = std::max(new_precision, s.min_order);
    out.min_order = std::min(s.min_order, out.precision);
    out.coeffs.resize(static_cast<std::size_t>(out.precision - out.min_order),
                      gf2m::zero(s.field));
    return out;
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a, b);
    int prec = std::min(a.precision, b.precision);
    int lo = std::min(std::min(a.min_order, b.min_order), prec);
    LaurentSeries out = make(a.field, lo, prec);
    for (int n = lo; n < prec; ++n) {
        FieldElement c = gf2m::zero(a.field);
        if (n >= a.min_order && n < a.precision) c = c + coeff(a, n);
        if (n >= b.min_order && n < b.precision) c = c + coeff(b, n);
        out.coeffs[static_cast<std::size_t>(n - lo)] = c;
    }
    return out;
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a, b);
    const int ao = order(a);
    const int bo = order(b);
    /* First unknown contribution: unknown tail of one factor times the
     * leading term of the other. */
    int prec = std::min(a.precision + bo, b.precision + ao);
    int lo = std::min(ao + bo, prec);
    LaurentSeries out = make(a.field, lo, prec);
    for (int n = ao; n < a.precision; ++n) {
        const FieldElement& ca = coeff(a, n);
        if (ca.coeffs == 0) continue;
        for (int k = bo; k < b.precision && n + k < prec; ++k) {
            const FieldElement& cb = coeff(b, k);
            if (cb.coeffs == 0) continue;
            std::size_t idx = static_cast<std::size_t>(n + k - lo);
            out.coeffs[idx] = out.coeffs[idx] + ca * cb;
        }
    }
    return out;
}

LaurentSeries inv(const LaurentSeries& a) {
    const int d = order(a);
    if (d == a.precision)
        throw std::domain_error("inverse of a series that is zero to working precision");
    /* a = t^d * u with u a unit known to length L; 1/u is determined to the
     * same length, so 1/a covers orders [-d, P - 2d). */
    const int L = a.precision - d;
    std::vector<FieldElement> u(static_cast<std::size_t>(L), gf2m::zero(a.field));
    for (int n = 0; n < L; ++n) u[static_cast<std::size_t>(n)] = coeff(a, d + n);
    std::vector<FieldElement> v(static_cast<std::size_t>(L), gf2m::zero(a.field));
    const FieldElement u0inv = gf2m::inv(u[0]);
    v[0] = u0inv;
    for (int n = 1; n < L; ++n) {
        FieldElement acc = gf2m::zero(a.field);
        for (int k = 1; k <= n; ++k)
            acc = acc + u[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(n - k)];
        v[static_cast<std::size_t>(n)] = acc * u0inv;
    }
    LaurentSeries out = make(a.field, -d, a.precision - 2 * d);
    for (int n = 0; n < L && -d + n < out.precision; ++n)
        out.coeffs[static_cast<std::size_t>(n)] = v[static_cast<std::size_t>(n)];
    return out;
}

LaurentSeries frobenius_square(const LaurentSeries& a) {
    LaurentSeries out = make(a.field, 2 * a.min_order, 2 * a.precision);
    for (std::size_t n = 0; n < a.coeffs.size(); ++n)
        out.coeffs[2 * n] = a.coeffs[n] * a.coeffs[n];
    return out;
}

LaurentSeries wp(const LaurentSeries& a) { return add(frobenius_square(a), a); }

LaurentSeries solve_wp(const LaurentSeries& c) {
    for (int n = c.min_order; n <= 0 && n < c.precision; ++n)
        if (coeff(c, n).coeffs != 0)
            throw std::invalid_argument("solve_wp needs a right-hand side of positive order");
    const int P = c.precision;
    LaurentSeries acc = series_zero(c.field, P);
    LaurentSeries term = truncate(c, P);
    /* y = c + c^2 + c^4 + ...; each squaring doubles the term's order, so the
     * sum stabilizes below the precision window. */
    while (order(term) < P) {
        acc = add(acc, term);
        term = truncate(frobenius_square(term), P);
    }
    acc.precision = P;
    return acc;
}

std::vector<LaurentSeries> chain_expand(const IndexSequence& seq, int precision) {
    if (precision < 2) throw std::invalid_argument("precision must be at least 2");
    validate_alternating(seq);
    const FieldDescriptor& f = f4();
    std::vector<LaurentSeries> ms;
    ms.reserve(seq.size());
    ms.push_back(series_monomial(gf2m::one(f), 1, precision));
    for (std::size_t j = 1; j < seq.size(); ++j) {
        const FieldElement prev = fe4(seq[j - 1]);
        if (prev.coeffs == 0)
            throw std::invalid_argument("interior sequence entry is zero");
        LaurentSeries shifted = add(ms.back(), series_constant(prev, precision));
        LaurentSeries arg = add(add(shifted, series_constant(gf2m::one(f), precision)),
                                inv(shifted));
        const FieldElement step_const = wp_scalar(fe4(seq[j]));
        if (step_const.coeffs != 0)
            arg = add(arg, series_constant(step_const, precision));
        ms.push_back(solve_wp(arg));
    }
    return ms;
}

PrincipalPart pp_add(const PrincipalPart& a, const PrincipalPart& b) {
    PrincipalPart out = a;
    for (const auto& [e, c] : b) {
        auto it = out.find(e);
        if (it == out.end()) {
            out.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.coeffs == 0) out.erase(it);
        }
    }
    return out;
}

PrincipalPart pp_scale(const FieldElement& c, const PrincipalPart& a) {
    PrincipalPart out;
    if (c.coeffs == 0) return out;
    for (const auto& [e, v] : a) out.emplace(e, c * v);
    return out;
}

PrincipalPart pp_square(const PrincipalPart& a) {
    PrincipalPart out;
    for (const auto& [e, v] : a) out.emplace(2 * e, v * v);
    return out;
}

PrincipalPart pp_wp(const PrincipalPart& a) { return pp_add(pp_square(a), a); }

PrincipalPart principal_part(const LaurentSeries& s) {
    PrincipalPart out;
    for (int n = s.min_order; n < 0 && n < s.precision; ++n) {
        FieldElement c = coeff(s, n);
        if (c.coeffs != 0) out.emplace(-n, c);
    }
    return out;
}

int chain_class(const IndexSequence& seq) {
    if (seq.empty() || seq[0] == kInfty)
        throw std::invalid_argument("sequence must start with a finite value");
    if (seq[0] == 1) return 0;
    if (seq[0] == 2 || seq[0] == 3) return 1;
    throw std::invalid_argument("sequence must start with a nonzero value");
}

int f_top_exponent(int j, int cls) {
    if (j < 0) throw std::invalid_argument("negative level");
    return 1 << ((j + 1 - cls) / 2);
}

PrincipalPart principal_F(const IndexSequence& seq, int j) {
    validate_alternating(seq);
    if (j < 0 || static_cast<std::size_t>(j) >= seq.size())
        throw std::invalid_argument("level exceeds the sequence");
    const int cls = chain_class(seq);
    PrincipalPart f;
    f.emplace(1, gf2m::one(f4())); // F_0 = 1/t
    for (int s = 1; s <= j; ++s) {
        if (s % 2 == 1 - cls) {
            f = pp_wp(f);
        } else {
            const FieldElement a = fe4(seq[s - 1]);
            if (a.coeffs != 2 && a.coeffs != 3)
                throw std::logic_error("multiplier escaped GF(4)-GF(2)");
            f = pp_scale(a, f);
        }
    }
    return f;
}

namespace {

/*
 * Shared reduction core.  head holds coefficients on slots bottom+2, ...;
 * output.first holds the wp-argument coefficients on slots bottom..top-2 and
 * output.second the GF(2) leftover multiple of F_bottom.  Implements the
 * descending rewrite B_j F_j = wp(c^2 F_{j-2}) + wp(c) F_{j-2} with
 * c = B_j a_{j-1} via prefix sums; zero slots still propagate the carry.
 */
std::pair<BTable, int> reduce_core(const BTable& head, const IndexSequence& seq, int bottom) {
    BTable lower;
    if (head.empty()) return {lower, 0};
    const int top = head.rbegin()->first;
    for (const auto& [slot, c] : head) {
        (void)c;
        if (slot < bottom + 2 || (slot - bottom) % 2 != 0)
            throw std::invalid_argument("slot index of wrong parity or below the floor");
    }
    auto a_at = [&](int idx) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= seq.size())
            throw std::invalid_argument("sequence too short for the requested slots");
        return fe4(seq[idx]);
    };
    auto b_at = [&](int slot) {
        auto it = head.find(slot);
        return it == head.end() ? gf2m::zero(f4()) : it->second;
    };
    /* prefix[j] = sum over k = bottom+2 .. j of B_k a_{k-1} */
    std::map<int, FieldElement> prefix;
    FieldElement run = gf2m::zero(f4());
    for (int k = bottom + 2; k <= top; k += 2) {
        run = run + b_at(k) * a_at(k - 1);
        prefix[k] = run;
    }
    const FieldElement bstar_el = wp_scalar(run);
    if (bstar_el.coeffs > 1) throw std::logic_error("leftover coefficient escaped GF(2)");
    for (int j = bottom; j + 2 <= top; j += 2) {
        FieldElement pre = (j >= bottom + 2) ? prefix[j] : gf2m::zero(f4());
        FieldElement out = (bstar_el + wp_scalar(pre)) * (a_at(j + 1) * a_at(j + 1)) +
                           wp_scalar(b_at(j + 2));
        if (out.coeffs != 0) lower[j] = out;
    }
    return {lower, static_cast<int>(bstar_el.coeffs)};
}

} // namespace

HeadReduction head_reduce(const BTable& b_in, const IndexSequence& seq) {
    validate_alternating(seq);
    const int cls = chain_class(seq);
    auto [lower, bstar] = reduce_core(b_in, seq, cls);
    HeadReduction r;
    r.lower = std::move(lower);
    r.bstar = bstar;
    if (bstar) {
        /* F_bottom is 1/t for class 0 and a_0/t for class 1. */
        FieldElement c = (cls == 0) ? gf2m::one(f4()) : fe4(seq[0]);
        r.residual.emplace(1, c);
    }
    return r;
}

namespace {

/* Symbol s >= 2 satisfies wp(X_s) = lambda * X_src up to regular terms;
 * X_1 satisfies wp(X_1) = F_bottom. */
struct SymbolDef {
    int src = 0;
    FieldElement lambda;
};

struct MachineState {
    BTable fslots;                    // slot -> GF(4) coefficient (includes bottom)
    std::map<int, FieldElement> sym;  // symbol -> GF(4) coefficient
    std::vector<int> vlog;            // vlog[s-1] = log2 pole order of X_s
    std::vector<SymbolDef> defs;      // defs[s-1]; entry 0 unused
    int vt_log = 0;                   // log2 of the F-slot order multiplier
};

/*
 * F_2-linear solve for the substitution coefficients.  Unknowns: gamma_s in
 * GF(4) for each symbol s >= 2 (substituting wp(gamma_s X_s) adds
 * wp(gamma_s) at coordinate s and gamma_s^2 lambda_s at coordinate src_s;
 * X_1-substitutions cancel identically and carry no freedom).  Coordinates:
 * GF(4) residue coefficients at symbols 1..K, optionally excluding one.
 * Returns the gamma witness when the residual can be cancelled on the kept
 * coordinates; the witness is unique because distinct symbols have distinct
 * pole orders.
 */
std::optional<std::vector<FieldElement>>
solve_moves(const MachineState& st, const std::map<int, FieldElement>& residual, int skip_coord) {
    const int K = static_cast<int>(st.vlog.size());
    std::vector<int> coords;
    for (int s = 1; s <= K; ++s)
        if (s != skip_coord) coords.push_back(s);
    const int rows = 2 * static_cast<int>(coords.size());
    const int cols = 2 * (K - 1); // gamma bits for s = 2..K

    auto coord_row = [&](int s) -> int {
        for (std::size_t n = 0; n < coords.size(); ++n)
            if (coords[n] == s) return 2 * static_cast<int>(n);
        return -1;
    };

    /* columns[c] = F_2 vector of the residual-space effect of gamma bit c */
    std::vector<std::uint64_t> matrix(static_cast<std::size_t>(std::max(rows, 1)), 0);
    auto add_entry = [&](int row, int col) {
        matrix[static_cast<std::size_t>(row)] ^= 1ull << col;
    };
    for (int s = 2; s <= K; ++s) {
        for (int bit = 0; bit < 2; ++bit) {
            const int col = 2 * (s - 2) + bit;
            const FieldElement gamma = fe4(bit == 0 ? 1 : 2);
            const FieldElement at_s = wp_scalar(gamma);
            const FieldElement at_src = gamma * gamma * st.defs[static_cast<std::size_t>(s - 1)].lambda;
            int row_s = coord_row(s);
            if (row_s >= 0) {
                if (at_s.coeffs & 1u) add_entry(row_s, col);
                if (at_s.coeffs & 2u) add_entry(row_s + 1, col);
            }
            int row_src = coord_row(st.defs[static_cast<std::size_t>(s - 1)].src);
            if (row_src >= 0) {
                if (at_src.coeffs & 1u) add_entry(row_src, col);
                if (at_src.coeffs & 2u) add_entry(row_src + 1, col);
            }
        }
    }
    std::vector<int> rhs(static_cast<std::size_t>(std::max(rows, 1)), 0);
    for (const auto& [s, c] : residual) {
        int row = coord_row(s);
        if (row < 0) continue;
        rhs[static_cast<std::size_t>(row)] = static_cast<int>(c.coeffs & 1u);
        rhs[static_cast<std::size_t>(row + 1)] = static_cast<int>((c.coeffs >> 1) & 1u);
    }

    /* Gaussian elimination over F_2. */
    std::vector<int> pivot_of_col(static_cast<std::size_t>(std::max(cols, 1)), -1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (matrix[static_cast<std::size_t>(r)] >> col & 1) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(matrix[static_cast<std::size_t>(rank)], matrix[static_cast<std::size_t>(sel)]);
        std::swap(rhs[static_cast<std::size_t>(rank)], rhs[static_cast<std::size_t>(sel)]);
        for (int r = 0; r < rows; ++r) {
            if (r != rank && (matrix[static_cast<std::size_t>(r)] >> col & 1)) {
                matrix[static_cast<std::size_t>(r)] ^= matrix[static_cast<std::size_t>(rank)];
                rhs[static_cast<std::size_t>(r)] ^= rhs[static_cast<std::size_t>(rank)];
            }
        }
        pivot_of_col[static_cast<std::size_t>(col)] = rank;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (rhs[static_cast<std::size_t>(r)]) return std::nullopt;
    std::vector<int> bits(static_cast<std::size_t>(std::max(cols, 1)), 0);
    for (int col = 0; col < cols; ++col)
        if (pivot_of_col[static_cast<std::size_t>(col)] >= 0)
            bits[static_cast<std::size_t>(col)] = rhs[static_cast<std::size_t>(pivot_of_col[static_cast<std::size_t>(col)])];
    std::vector<FieldElement> gammas(static_cast<std::size_t>(K + 1), gf2m::zero(f4()));
    for (int s = 2; s <= K; ++s) {
        int v = bits[static_cast<std::size_t>(2 * (s - 2))] |
                (bits[static_cast<std::size_t>(2 * (s - 2) + 1)] << 1);
        gammas[static_cast<std::size_t>(s)] = fe4(v);
    }
    return gammas;
}

void add_into(std::map<int, FieldElement>& m, int key, const FieldElement& v) {
    if (v.coeffs == 0) return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, v);
    } else {
        it->second = it->second + v;
        if (it->second.coeffs == 0) m.erase(it);
    }
}

/* Effect of the gamma substitutions on the residual vector. */
std::map<int, FieldElement>
apply_moves(const MachineState& st, std::map<int, FieldElement> residual,
            const std::vector<FieldElement>& gammas) {
    const int K = static_cast<int>(st.vlog.size());
    for (int s = 2; s <= K; ++s) {
        const FieldElement g = gammas[static_cast<std::size_t>(s)];
        if (g.coeffs == 0) continue;
        add_into(residual, s, wp_scalar(g));
        add_into(residual, st.defs[static_cast<std::size_t>(s - 1)].src,
                 g * g * st.defs[static_cast<std::size_t>(s - 1)].lambda);
    }
    return residual;
}

StepKind advance(MachineState& st, const IndexSequence& seq, int bottom, int t) {
    /* Split the F-slot content into head and bottom coefficient. */
    BTable head = st.fslots;
    FieldElement bottom_coef = gf2m::zero(f4());
    if (auto it = head.find(bottom); it != head.end()) {
        bottom_coef = it->second;
        head.erase(it);
    }
    auto [next_fslots, bstar] = reduce_core(head, seq, bottom);
    FieldElement c0 = bottom_coef + fe4(bstar);

    if (t == 0) {
        if (c0.coeffs != 1)
            throw std::logic_error("initial reduction must leave a unit bottom residue");
        st.fslots = std::move(next_fslots);
        st.sym.clear();
        st.sym.emplace(1, gf2m::one(f4()));
        st.vlog = {0};
        st.defs = {SymbolDef{}};
        st.vt_log = 1;
        return StepKind::TotallyRamified;
    }

    /* Bottom elimination through wp(X_1) = F_bottom:
     * c0 F_bottom = wp(c0^2 X_1) + wp(c0) X_1 + regular. */
    std::map<int, FieldElement> next_sym;
    std::map<int, FieldElement> residual = st.sym;
    if (c0.coeffs != 0) {
        add_into(next_sym, 1, c0 * c0);
        add_into(residual, 1, wp_scalar(c0));
    }

    /* The unique simple-pole symbol; always the newest. */
    int sstar = 0;
    for (int s = 1; s <= static_cast<int>(st.vlog.size()); ++s)
        if (st.vlog[static_cast<std::size_t>(s - 1)] == 0) {
            if (sstar != 0) throw std::logic_error("simple-pole symbol not unique");
            sstar = s;
        }
    if (sstar == 0) throw std::logic_error("no simple-pole symbol in state");

    auto witness = solve_moves(st, residual, sstar);
    if (!witness)
        throw std::logic_error("residue cannot be confined to the simple-pole symbol");
    auto after = apply_moves(st, residual, *witness);
    for (const auto& [s, c] : after)
        if (s != sstar && c.coeffs != 0)
            throw std::logic_error("substitution left residue off the simple-pole symbol");
    FieldElement lam = gf2m::zero(f4());
    if (auto it = after.find(sstar); it != after.end()) lam = it->second;
    for (int s = 2; s <= static_cast<int>(st.vlog.size()); ++s)
        add_into(next_sym, s, (*witness)[static_cast<std::size_t>(s)]);

    if (lam.coeffs == 0) {
        st.fslots = std::move(next_fslots);
        st.sym = std::move(next_sym);
        return StepKind::Unramified;
    }

    /* Odd-order residue survives: the step ramifies and spawns a new symbol
     * with wp(X_new) = lam * X_sstar; all existing pole orders double. */
    const int knew = static_cast<int>(st.vlog.size()) + 1;
    for (int& v : st.vlog) ++v;
    st.vlog.push_back(0);
    st.defs.push_back(SymbolDef{sstar, lam});
    ++st.vt_log;
    add_into(next_sym, knew, gf2m::one(f4()));
    st.fslots = std::move(next_fslots);
    st.sym = std::move(next_sym);
    return StepKind::TotallyRamified;
}

} // namespace

StepReport classify_step_symbolic(const IndexSequence& seq, int t_step) {
    std::size_t interior = validate_alternating(seq);
    if (interior + 1 != seq.size() || seq.back() != 0)
        throw std::invalid_argument("classification needs a zero sequence (trailing 0)");
    const int i = static_cast<int>(seq.size()) - 1;
    if (t_step < 0 || t_step > i)
        throw std::invalid_argument("step index out of range");
    const int cls = chain_class(seq);
    const int bottom = cls;

    MachineState st;
    st.fslots.emplace(i, gf2m::one(f4()));

    StepKind last = StepKind::Unramified;
    for (int t = 0; t <= t_step; ++t) last = advance(st, seq, bottom, t);

    StepReport rep;
    rep.kind = last;
    rep.contribution = (last == StepKind::TotallyRamified) ? 2 : 0;
    int max_log = -1;
    for (const auto& [slot, c] : st.fslots) {
        if (c.coeffs == 0) continue;
        int lg = (slot + 1 - cls) / 2 + st.vt_log;
        max_log = std::max(max_log, lg);
        rep.fslots[slot] = static_cast<int>(c.coeffs);
    }
    for (const auto& [s, c] : st.sym) {
        if (c.coeffs == 0) continue;
        max_log = std::max(max_log, st.vlog[static_cast<std::size_t>(s - 1)]);
        rep.symcoef[s] = static_cast<int>(c.coeffs);
    }
    if (max_log < 0) throw std::logic_error("post-step state lost its pole");
    if (max_log >= 62) throw std::logic_error("pole order exceeds the report range");
    rep.ord = -(1ll << max_log);
    return rep;
}

} // namespace astower::laurent
