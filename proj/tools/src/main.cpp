#include "astower/gf2m.hpp"
#include "astower/laurent.hpp"
#include "astower/points.hpp"
#include "astower/rami.hpp"
#include "astower/verify.hpp"
#include "astower/zeta.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using astower::rami::BigInt;
using json = nlohmann::ordered_json;

struct Options {
    int i_max = 10;
    int k = 3;
    int level = 1;
    int precision = 128;
    std::string format = "text";
    std::string out_path;
};

/* Writes to --out when given, stdout otherwise; unwritable paths throw. */
void emit(const Options& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opt.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path: " + opt.out_path);
    f << payload;
    if (!f) throw std::runtime_error("cannot write output path: " + opt.out_path);
}

/* JSON scalar for an exact integer: a number when it fits 64 bits, its
 * decimal string otherwise. */
json json_int(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return json(v.convert_to<long long>());
    return json(v.str());
}

const char* class_name(astower::rami::ChainClass c) {
    switch (c) {
    case astower::rami::ChainClass::One: return "one";
    case astower::rami::ChainClass::Rho: return "rho";
    default: return "special";
    }
}

std::string seq_string(const astower::IndexSequence& seq) {
    static const char* names[] = {"0", "1", "rho", "rho^2"};
    std::string out;
    for (std::size_t p = 0; p < seq.size(); ++p) {
        if (p) out += ",";
        out += (seq[p] == astower::kInfty) ? "inf" : names[seq[p]];
    }
    return out;
}

int cmd_verify(const Options& opt) {
    astower::verify::VerifyConfig cfg{opt.i_max, opt.k, opt.precision};
    const auto suites = astower::verify::run_all(cfg);
    bool all = true;
    std::ostringstream text;
    if (opt.format == "json") {
        json arr = json::array();
        for (const auto& s : suites) {
            all = all && s.passed;
            arr.push_back({{"suite", s.name},
                           {"passed", s.passed},
                           {"checks", s.checks},
                           {"detail", s.detail}});
        }
        text << arr.dump(2) << "\n";
    } else if (opt.format == "csv") {
        text << "suite,passed,checks,detail\n";
        for (const auto& s : suites) {
            all = all && s.passed;
            text << s.name << "," << (s.passed ? "pass" : "fail") << "," << s.checks << ","
                 << s.detail << "\n";
        }
    } else {
        for (const auto& s : suites) {
            all = all && s.passed;
            text << s.name << ": " << (s.passed ? "PASS" : "FAIL") << " (" << s.checks
                 << " checks)";
            if (!s.passed) text << " first failure: " << s.detail;
            text << "\n";
        }
        text << (all ? "all suites passed\n" : "verification FAILED\n");
    }
    emit(opt, text.str());
    return all ? 0 : 1;
}

int cmd_table(const Options& opt) {
    const auto rep = astower::points::asymptotics_table(opt.i_max);
    std::ostringstream text;
    if (opt.format == "csv") {
        text << "i,n_i,genus_hurwitz,genus_closed,N8,ratio_num,ratio_den,ratio_float\n";
        for (const auto& r : rep.rows)
            text << r.i << "," << r.n_i << "," << r.genus_hurwitz.str() << ","
                 << r.genus_closed.str() << "," << r.n8 << "," << r.ratio_num.str() << ","
                 << r.ratio_den.str() << "," << r.ratio_float << "\n";
    } else if (opt.format == "json") {
        json arr = json::array();
        for (const auto& r : rep.rows)
            arr.push_back({{"i", r.i},
                           {"n_i", r.n_i},
                           {"genus_hurwitz", json_int(r.genus_hurwitz)},
                           {"genus_closed", json_int(r.genus_closed)},
                           {"N8", r.n8},
                           {"ratio_num", json_int(r.ratio_num)},
                           {"ratio_den", json_int(r.ratio_den)},
                           {"ratio_float", r.ratio_float}});
        text << arr.dump(2) << "\n";
    } else {
        text << "  i        n_i    genus_hurwitz     genus_closed            N8   ratio_float\n";
        for (const auto& r : rep.rows) {
            std::ostringstream line;
            line.width(3);
            line << r.i;
            line.width(11);
            line << r.n_i;
            line.width(17);
            line << r.genus_hurwitz.str();
            line.width(17);
            line << r.genus_closed.str();
            line.width(14);
            line << r.n8;
            line.width(14);
            line << r.ratio_float;
            text << line.str() << "\n";
        }
        text << "bounds: sqrt(8)-1 = " << rep.dv_bound << ", zink = " << rep.zink_num << "/"
             << rep.zink_den << ", kummer = " << rep.kummer_num << "/" << rep.kummer_den
             << ", tower limit = " << rep.limit_num << "/" << rep.limit_den
             << (rep.limit_equals_zink ? " (matches the zink bound)" : "") << "\n";
    }
    emit(opt, text.str());
    return 0;
}

int cmd_points(const Options& opt) {
    const long long affine = astower::points::affine_count(opt.level, opt.k);
    // the two chains through 0 and infinity are rational over every field;
    // further boundary classes are settled for levels 1-2 and for GF(8)
    long long boundary = 2;
    bool exact = true;
    if (opt.level <= 2) boundary = astower::zeta::boundary_count(opt.level, opt.k);
    else if (opt.k != 3) exact = false;
    const long long total = affine + boundary;
    const auto split = astower::points::split_check(opt.k);

    std::ostringstream text;
    if (opt.format == "json") {
        json doc{{"level", opt.level},
                 {"k", opt.k},
                 {"affine", affine},
                 {"boundary", boundary},
                 {"boundary_exact", exact},
                 {"total", total},
                 {"total_is_lower_bound", !exact},
                 {"split",
                  {{"applicable", split.applicable},
                   {"forward_image", split.forward_image},
                   {"wp_image", split.wp_image},
                   {"successor_pairs", split.successor_pairs},
                   {"sweep", split.sweep},
                   {"passed", split.passed()}}}};
        text << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        text << "level,k,affine,boundary,boundary_exact,total,total_is_lower_bound,split_passed\n"
             << opt.level << "," << opt.k << "," << affine << "," << boundary << ","
             << (exact ? 1 : 0) << "," << total << "," << (exact ? 0 : 1) << ","
             << (split.passed() ? 1 : 0) << "\n";
    } else {
        text << "level " << opt.level << " over GF(2^" << opt.k << "): affine chains " << affine
             << ", boundary points " << boundary << (exact ? "" : " (at least)") << ", total "
             << total << (exact ? "" : " (lower bound)") << "\n";
        if (!split.applicable) {
            text << "splitting check: not applicable (no elements outside GF(2))\n";
        } else {
            text << "splitting check: forward image " << (split.forward_image ? "ok" : "FAIL")
                 << ", wp image " << (split.wp_image ? "ok" : "FAIL") << ", successor pairs "
                 << (split.successor_pairs ? "ok" : "FAIL") << ", sweep "
                 << (split.sweep ? "ok" : "FAIL") << "\n";
        }
    }
    emit(opt, text.str());
    return 0;
}

int cmd_genus(const Options& opt) {
    const auto hurwitz = astower::rami::genus(opt.level, astower::rami::GenusMethod::Hurwitz);
    const auto closed = astower::rami::genus(opt.level, astower::rami::GenusMethod::Closed);
    std::ostringstream text;
    if (opt.format == "json") {
        json doc{{"level", opt.level},
                 {"hurwitz", json_int(hurwitz)},
                 {"closed", json_int(closed)},
                 {"agree", hurwitz == closed}};
        text << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        text << "level,hurwitz,closed,agree\n"
             << opt.level << "," << hurwitz.str() << "," << closed.str() << ","
             << (hurwitz == closed ? 1 : 0) << "\n";
    } else {
        text << "genus of level " << opt.level << ": hurwitz " << hurwitz.str() << ", closed "
             << closed.str() << (hurwitz == closed ? " (agree)" : " (DISAGREE)") << "\n";
    }
    emit(opt, text.str());
    return 0;
}

int cmd_nseq(const Options& opt) {
    const long long n = astower::rami::count_ramified(opt.level);
    const long long n_closed =
        opt.level >= 1 ? astower::rami::count_ramified_closed(opt.level) : n;

    struct OriginRow {
        int origin;
        astower::rami::ChainClass cls;
        int tail;
        long long sequences;
        long long mult;
        bool ramified;
    };
    std::vector<OriginRow> rows;
    for (int origin = 1; origin <= opt.level; ++origin) {
        const auto cls = astower::rami::class_of_level(origin);
        const int tail = opt.level - origin;
        long long mult = 1;
        for (int j = 0; j < tail; ++j)
            if (astower::rami::classify_closed(origin, j, cls) ==
                astower::laurent::StepKind::Unramified)
                mult *= 2;
        rows.push_back({origin, cls, tail, 1ll << ((origin + 1) / 2), mult,
                        astower::rami::classify_closed(origin, tail, cls) ==
                            astower::laurent::StepKind::TotallyRamified});
    }

    std::ostringstream text;
    if (opt.format == "json") {
        json origins = json::array();
        for (const auto& r : rows)
            origins.push_back({{"origin", r.origin},
                               {"class", class_name(r.cls)},
                               {"tail", r.tail},
                               {"sequences", r.sequences},
                               {"mult", r.mult},
                               {"ramified", r.ramified}});
        json doc{{"level", opt.level},
                 {"n", n},
                 {"n_closed", n_closed},
                 {"agree", n == n_closed},
                 {"specials", 2},
                 {"origins", origins}};
        if (opt.level >= 1 && opt.level <= 10) {
            json seqs = json::array();
            for (const auto& s : astower::rami::zero_sequences(opt.level))
                seqs.push_back(seq_string(s));
            doc["zero_sequences"] = seqs;
        }
        text << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        text << "origin,class,tail,sequences,mult,ramified\n";
        for (const auto& r : rows)
            text << r.origin << "," << class_name(r.cls) << "," << r.tail << "," << r.sequences
                 << "," << r.mult << "," << (r.ramified ? 1 : 0) << "\n";
    } else {
        text << "level " << opt.level << ": n = " << n << " ramified points (closed form "
             << n_closed << (n == n_closed ? ", agree" : ", DISAGREE") << ")\n";
        text << "  specials: 2 chains, always ramified\n";
        for (const auto& r : rows)
            text << "  origin " << r.origin << " (" << class_name(r.cls) << "), tail " << r.tail
                 << ": " << r.sequences << " sequences, mult " << r.mult << ", next step "
                 << (r.ramified ? "ramified" : "unramified") << "\n";
        if (opt.level >= 1 && opt.level <= 10) {
            text << "  zero sequences of x_" << opt.level << ":\n";
            for (const auto& s : astower::rami::zero_sequences(opt.level))
                text << "    (" << seq_string(s) << ")\n";
        }
    }
    emit(opt, text.str());
    return 0;
}

int cmd_zeta(const Options& opt) {
    const auto rep = astower::zeta::genus_crosscheck(opt.level);
    std::ostringstream text;
    if (opt.format == "json") {
        json coeffs = json::array();
        for (const auto& b : rep.lpoly.coeffs) coeffs.push_back(json_int(b));
        json roots = json::array();
        for (double m : rep.roots_abs) roots.push_back(m);
        json predicted = json::array();
        for (const auto& p : rep.predicted) predicted.push_back(json_int(p));
        json doc{{"q", rep.q},
                 {"g", rep.g},
                 {"coeffs", coeffs},
                 {"roots_abs", roots},
                 {"predicted_counts", predicted},
                 {"counts", rep.counts},
                 {"passed", rep.passed()}};
        text << doc.dump(2) << "\n";
    } else if (opt.format == "csv") {
        text << "k,coefficient\n";
        for (std::size_t idx = 0; idx < rep.lpoly.coeffs.size(); ++idx)
            text << idx << "," << rep.lpoly.coeffs[idx].str() << "\n";
    } else {
        text << "level " << opt.level << " over GF(2): genus " << rep.g << "\n";
        text << "L coefficients:";
        for (const auto& b : rep.lpoly.coeffs) text << " " << b.str();
        text << "\ncounts:";
        for (auto c : rep.counts) text << " " << c;
        text << "\npredicted upper counts:";
        for (const auto& p : rep.predicted) text << " " << p.str();
        text << "\nchecks: integral " << (rep.integral ? "ok" : "FAIL") << ", functional "
             << (rep.functional_equation ? "ok" : "FAIL") << ", roots "
             << (rep.roots_on_circle ? "ok" : "FAIL") << ", round trip "
             << (rep.counts_reproduced ? "ok" : "FAIL") << ", predictions "
             << (rep.predictions_match ? "ok" : "FAIL") << ", weil bound "
             << (rep.hasse_weil ? "ok" : "FAIL") << "\n";
    }
    emit(opt, text.str());
    return rep.passed() ? 0 : 1;
}

int cmd_expand(const Options& opt) {
    const auto seqs = astower::rami::zero_sequences(opt.level);
    const auto& seq = seqs.front(); // canonical: lexicographically first
    const int cls = astower::laurent::chain_class(seq);
    const auto ms = astower::laurent::chain_expand(seq, opt.precision);

    std::ostringstream text;
    if (opt.format == "json") {
        json expansions = json::array();
        for (std::size_t j = 0; j < ms.size(); ++j) {
            json coeffs = json::object();
            for (int nn = ms[j].min_order; nn < ms[j].precision; ++nn) {
                const auto c = astower::laurent::coeff(ms[j], nn);
                if (c.coeffs) coeffs[std::to_string(nn)] = static_cast<int>(c.coeffs);
            }
            expansions.push_back({{"level", static_cast<int>(j)},
                                  {"order", astower::laurent::order(ms[j])},
                                  {"coeffs", coeffs}});
        }
        json principal = json::array();
        for (std::size_t j = 0; j < ms.size(); ++j) {
            json terms = json::object();
            for (const auto& [e, c] : astower::laurent::principal_F(seq, static_cast<int>(j)))
                terms[std::to_string(e)] = static_cast<int>(c.coeffs);
            principal.push_back({{"level", static_cast<int>(j)}, {"terms", terms}});
        }
        json doc{{"level", opt.level},
                 {"sequence", seq_string(seq)},
                 {"class", cls},
                 {"precision", opt.precision},
                 {"legend", {{"0", "0"}, {"1", "1"}, {"2", "rho"}, {"3", "rho^2"}}},
                 {"expansions", expansions},
                 {"principal_parts", principal}};
        text << doc.dump(2) << "\n";
    } else {
        text << "canonical zero sequence of x_" << opt.level << ": (" << seq_string(seq)
             << "), precision " << opt.precision << "\n";
        text << "GF(4) legend: 2 = rho, 3 = rho^2\n";
        for (std::size_t j = 0; j < ms.size(); ++j) {
            text << "m_" << j << " (order " << astower::laurent::order(ms[j]) << "):";
            int printed = 0;
            for (int nn = ms[j].min_order; nn < ms[j].precision && printed < 12; ++nn) {
                const auto c = astower::laurent::coeff(ms[j], nn);
                if (!c.coeffs) continue;
                text << (printed ? " + " : " ");
                if (c.coeffs != 1) text << static_cast<int>(c.coeffs) << "*";
                text << "t^" << nn;
                ++printed;
            }
            text << " + ...\n";
            text << "  1/m_" << j << " principal part:";
            for (const auto& [e, c] : astower::laurent::principal_F(seq, static_cast<int>(j))) {
                text << " ";
                if (c.coeffs != 1) text << static_cast<int>(c.coeffs) << "*";
                text << "t^-" << e;
            }
            text << "\n";
        }
    }
    emit(opt, text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit Artin-Schreier tower over GF(8): verification and tables"};
    app.require_subcommand(1);

    Options opt;

    auto add_common = [&opt](CLI::App* sub, bool imax, bool k, int level_lo, int level_hi,
                             bool precision) {
        if (imax)
            sub->add_option("--imax", opt.i_max, "largest tower level")->check(CLI::Range(0, 59));
        if (k)
            sub->add_option("--k", opt.k, "extension degree of the coefficient field")
                ->check(CLI::Range(1, 24));
        if (level_hi >= level_lo)
            sub->add_option("--level", opt.level, "tower level")
                ->check(CLI::Range(level_lo, level_hi));
        if (precision)
            sub->add_option("--precision", opt.precision, "series truncation order")
                ->check(CLI::Range(2, 1 << 20));
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--out", opt.out_path, "write output to this path");
    };

    auto* verify = app.add_subcommand("verify", "run the cross-module verification suites");
    add_common(verify, true, true, 1, 0, true);
    auto* table = app.add_subcommand("table", "per-level counts, genus, and ratios");
    add_common(table, true, false, 1, 0, false);
    auto* pts = app.add_subcommand("points", "chain counts and the splitting report");
    add_common(pts, false, true, 1, 59, false);
    auto* gen = app.add_subcommand("genus", "genus of one level, two ways");
    add_common(gen, false, false, 0, 59, false);
    auto* nseq = app.add_subcommand("nseq", "ramified point ledger of one level");
    add_common(nseq, false, false, 0, 59, false);
    auto* zeta = app.add_subcommand("zeta", "L-polynomial crosscheck of one level");
    add_common(zeta, false, false, 1, 2, false);
    auto* expand = app.add_subcommand("expand", "local expansions on the canonical chain");
    add_common(expand, false, false, 1, 40, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // help text, success
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(opt);
        if (table->parsed()) return cmd_table(opt);
        if (pts->parsed()) return cmd_points(opt);
        if (gen->parsed()) return cmd_genus(opt);
        if (nseq->parsed()) return cmd_nseq(opt);
        if (zeta->parsed()) return cmd_zeta(opt);
        if (expand->parsed()) return cmd_expand(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
