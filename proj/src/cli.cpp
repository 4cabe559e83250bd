#include "frobkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <limits>
#include <optional>

#include "frobkit/closedforms.hpp"
#include "frobkit/oracle.hpp"
#include "frobkit/semigroup.hpp"
#include "frobkit/verify.hpp"

namespace frobkit {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kCliBaseCap = 1'000'000;  // largest allowed a1

ordered_json json_int(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();  // too wide for consumers; decimal string instead
}

ordered_json json_int(std::uint64_t v) { return json_int(BigInt(v)); }

ordered_json json_weighted(const GaussianRational& w) {
    ordered_json obj;
    obj["re"] = to_string(w.re);
    obj["im"] = to_string(w.im);
    return obj;
}

ordered_json json_generators(const std::vector<std::uint64_t>& gens) {
    ordered_json arr = ordered_json::array();
    for (std::uint64_t g : gens) {
        arr.push_back(json_int(g));
    }
    return arr;
}

std::uint64_t cell_cap_from_env() {
    const char* env = std::getenv("FROBKIT_MAX_CELLS");
    if (env == nullptr) {
        return kDefaultCellCap;
    }
    std::string text(env);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw InvalidParams("FROBKIT_MAX_CELLS must be a positive integer, got '" +
                            text + "'");
    }
    std::uint64_t value = std::strtoull(text.c_str(), nullptr, 10);
    if (value == 0) {
        throw InvalidParams("FROBKIT_MAX_CELLS must be positive");
    }
    return value;
}

GeneratorSet make_generators(const std::vector<std::uint64_t>& gens) {
    GeneratorSet set(gens);
    if (set.smallest() > kCliBaseCap) {
        throw InvalidParams("smallest generator exceeds the CLI cap of " +
                            std::to_string(kCliBaseCap));
    }
    return set;
}

struct CheckState {
    bool requested = false;
    bool mismatch = false;
};

// Appends `oracle: {...}` to obj and records whether anything disagreed.
void append_oracle_block(ordered_json& obj, CheckState& check,
                         const GapReport& truth,
                         const std::optional<BigInt>& g,
                         const std::optional<BigInt>& n,
                         const std::optional<BigInt>& s,
                         const std::optional<GaussianRational>& weighted) {
    ordered_json block;
    bool match = true;
    if (g) {
        block["g"] = json_int(truth.g);
        match = match && *g == truth.g;
    }
    if (n) {
        block["n"] = json_int(truth.n);
        match = match && *n == truth.n;
    }
    if (s) {
        block["s"] = json_int(truth.s);
        match = match && *s == truth.s;
    }
    if (weighted) {
        block["weighted"] = json_weighted(*truth.weighted);
        match = match && *weighted == *truth.weighted;
    }
    block["match"] = match;
    obj["oracle"] = block;
    check.mismatch = check.mismatch || !match;
}

int emit(std::ostream& out, const ordered_json& obj, const CheckState& check) {
    out << obj.dump() << "\n";
    return check.requested && check.mismatch ? 2 : 0;
}

int emit_bare(std::ostream& out, const BigInt& value) {
    out << value.str() << "\n";
    return 0;
}

std::string csv_escape(const std::string& field) {
    return "\"" + field + "\"";  // fields never contain quotes
}

int emit_verify(std::ostream& out, std::ostream& err, const VerifyReport& report,
                const std::string& format, double elapsed_ms) {
    if (format == "csv") {
        out << "family,params,quantity,expected,got,ok\n";
        for (const CaseResult& c : report.cases) {
            out << report.family << ',' << csv_escape(c.params) << ','
                << c.quantity << ',' << csv_escape(c.expected) << ','
                << csv_escape(c.got) << ',' << (c.ok ? 1 : 0) << "\n";
        }
    } else {
        ordered_json obj;
        obj["family"] = report.family;
        obj["grid"] = report.grid;
        obj["tuples"] = report.tuples;
        obj["comparisons"] = report.cases.size();
        obj["mismatch_count"] = report.mismatch_count();
        ordered_json mism = ordered_json::array();
        for (const CaseResult& c : report.mismatches()) {
            ordered_json row;
            row["params"] = c.params;
            row["quantity"] = c.quantity;
            row["expected"] = c.expected;
            row["got"] = c.got;
            mism.push_back(row);
        }
        obj["mismatches"] = mism;
        out << obj.dump() << "\n";
    }
    err << "verify " << report.family << ": " << report.tuples << " tuples, "
        << report.cases.size() << " comparisons, " << report.mismatch_count()
        << " mismatches in " << elapsed_ms << " ms\n";
    return report.mismatch_count() == 0 ? 0 : 2;
}

struct Cli {
    CLI::App app{"frobkit: exact Frobenius / Sylvester invariants of numerical semigroups"};

    // shared options
    std::vector<std::uint64_t> gens;
    std::string lambda_text;
    std::string format = "json";
    bool list_gaps = false;
    bool check = false;
    bool want_sum = false, want_g = false, want_n = false;
    std::uint64_t a = 0, d = 0, h = 0, k = 0, K = 0, c = 0;

    // verify options
    std::string family;
    std::uint64_t max_a = 0, max_d = 0, max_h = 0, max_K = 0, quad_max_a = 0;
    std::uint64_t cases = 0, max_a1 = 0, seed = 1;
    unsigned jobs = 0;
    std::vector<std::uint64_t> ks;

    CLI::App* cmd_gaps = nullptr;
    CLI::App* cmd_report = nullptr;
    CLI::App* cmd_wsum = nullptr;
    CLI::App* cmd_ap = nullptr;
    CLI::App* cmd_almost = nullptr;
    CLI::App* cmd_extra = nullptr;
    CLI::App* cmd_geom = nullptr;
    CLI::App* cmd_quadruple = nullptr;
    CLI::App* cmd_verify = nullptr;

    CLI::App* add_command(const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        // long-only help so that short option names stay free (--h is the
        // almost-ap multiplier)
        sub->set_help_flag("--help", "print this help message and exit");
        return sub;
    }

    Cli() {
        app.require_subcommand(1);
        app.footer(
            "Output is JSON on stdout (CSV available for verify). Integers that\n"
            "do not fit a signed 64-bit value are emitted as decimal strings;\n"
            "weighted sums are exact rationals and always emitted as strings.\n"
            "Lambda grammar: [+|-]R[(+|-)Ri] with R = integer or integer/integer,\n"
            "bare 'i' = 1i (examples: 2, -1, 1/2, i, -3/2+1/2i).\n"
            "FROBKIT_MAX_CELLS overrides the brute-force scan cap (default 1e8).\n"
            "Exit codes: 0 ok, 1 invalid input, 2 verification mismatch.");

        cmd_gaps = add_command(
            "gaps", "Enumerate the gaps of a generator set by brute force");
        cmd_gaps->add_option("generators", gens, "generator list")->required();
        cmd_gaps->add_option("--lambda", lambda_text,
                             "also sum lambda^n n over the gaps (direct summation)");

        cmd_report = add_command(
            "report", "g, n, s of a generator set via the Apery-table engine");
        cmd_report->add_option("generators", gens, "generator list")->required();
        cmd_report->add_flag("--list", list_gaps, "include the explicit gap list");
        cmd_report->add_option("--lambda", lambda_text,
                               "also compute the weighted gap sum (lambda != 1)");
        cmd_report->add_flag("--check", check, "append a brute-force oracle block");

        cmd_wsum = add_command(
            "wsum", "Weighted gap sum of a generator set via the Apery-table engine");
        cmd_wsum->add_option("generators", gens, "generator list")->required();
        cmd_wsum->add_option("--lambda", lambda_text, "weight (required, != 0, 1)")
            ->required();
        cmd_wsum->add_flag("--check", check, "append a brute-force oracle block");

        cmd_ap = add_command(
            "ap", "Closed forms for the arithmetic progression a, a+d, ..., a+(k-1)d");
        cmd_ap->add_option("--a", a, "smallest generator")->required();
        cmd_ap->add_option("--d", d, "common difference")->required();
        cmd_ap->add_option("--k", k, "number of terms")->required();
        auto* ap_lambda = cmd_ap->add_option("--lambda", lambda_text,
                                             "also compute the weighted gap sum");
        auto* ap_sum = cmd_ap->add_flag("--sum", want_sum, "print only the gap sum");
        auto* ap_g = cmd_ap->add_flag("--g", want_g, "print only the Frobenius number");
        auto* ap_n = cmd_ap->add_flag("--n", want_n, "print only the gap count");
        auto* ap_check = cmd_ap->add_flag("--check", check, "append an oracle block");
        ap_sum->excludes(ap_g, ap_n, ap_check, ap_lambda);
        ap_g->excludes(ap_n, ap_check, ap_lambda);
        ap_n->excludes(ap_check, ap_lambda);

        cmd_almost = add_command(
            "almost-ap", "Closed forms for a, ha+d, ..., ha+(k-1)d");
        cmd_almost->add_option("--a", a, "smallest generator")->required();
        cmd_almost->add_option("--d", d, "common difference")->required();
        cmd_almost->add_option("--h", h, "multiplier")->required();
        cmd_almost->add_option("--k", k, "number of terms")->required();
        auto* al_sum = cmd_almost->add_flag("--sum", want_sum, "print only the gap sum");
        auto* al_g = cmd_almost->add_flag("--g", want_g, "print only the Frobenius number");
        auto* al_n = cmd_almost->add_flag("--n", want_n, "print only the gap count");
        auto* al_check = cmd_almost->add_flag("--check", check, "append an oracle block");
        al_sum->excludes(al_g, al_n, al_check);
        al_g->excludes(al_n, al_check);
        al_n->excludes(al_check);

        cmd_extra = add_command(
            "extra", "Gap sum of a, a+d, ..., a+(k-1)d, a+Kd (K > k)");
        cmd_extra->add_option("--a", a, "smallest generator")->required();
        cmd_extra->add_option("--d", d, "common difference")->required();
        cmd_extra->add_option("--k", k, "progression length")->required();
        cmd_extra->add_option("--K", K, "extra-term index")->required();
        auto* ex_sum = cmd_extra->add_flag("--sum", want_sum, "print only the gap sum");
        auto* ex_check = cmd_extra->add_flag("--check", check, "append an oracle block");
        ex_sum->excludes(ex_check);

        cmd_geom = add_command(
            "geom", "Gap sum of a, a+1, a+2, a+4, ..., a+2^k");
        cmd_geom->add_option("--a", a, "smallest generator")->required();
        cmd_geom->add_option("--k", k, "largest exponent (k >= 2)")->required();
        auto* ge_sum = cmd_geom->add_flag("--sum", want_sum, "print only the gap sum");
        auto* ge_check = cmd_geom->add_flag("--check", check, "append an oracle block");
        ge_sum->excludes(ge_check);

        cmd_quadruple = add_command(
            "quadruple", "Gap sum and Frobenius number of a, a+1, a+2, a+c");
        cmd_quadruple->add_option("--a", a, "smallest generator")->required();
        cmd_quadruple->add_option("--c", c, "offset, one of 4, 5, 6")->required();
        auto* qu_sum = cmd_quadruple->add_flag("--sum", want_sum, "print only the gap sum");
        auto* qu_g = cmd_quadruple->add_flag("--g", want_g, "print only the Frobenius number");
        auto* qu_check = cmd_quadruple->add_flag("--check", check, "append an oracle block");
        qu_sum->excludes(qu_g, qu_check);
        qu_g->excludes(qu_check);

        cmd_verify = add_command(
            "verify", "Sweep a parameter grid and diff fast paths against the oracle");
        cmd_verify
            ->add_option("--family", family,
                         "one of: ap, almost-ap, weighted-ap, extra, geom, generic")
            ->required()
            ->check(CLI::IsMember(
                {"ap", "almost-ap", "weighted-ap", "extra", "geom", "generic"}));
        cmd_verify->add_option("--max-a", max_a, "largest a (family default if omitted)");
        cmd_verify->add_option("--max-d", max_d, "largest d");
        cmd_verify->add_option("--max-h", max_h, "largest h (almost-ap)");
        cmd_verify->add_option("--max-K", max_K, "largest K (extra)");
        cmd_verify->add_option("--quad-max-a", quad_max_a, "largest a for the quadruple checks");
        cmd_verify->add_option("--ks", ks, "k values for geom (default 2 3 4)");
        cmd_verify->add_option("--cases", cases, "random cases (generic, default 500)");
        cmd_verify->add_option("--max-a1", max_a1, "largest smallest-generator (generic, default 60)");
        cmd_verify->add_option("--seed", seed, "RNG seed (generic, default 1)");
        cmd_verify->add_option("--jobs", jobs, "worker threads (default: hardware)");
        cmd_verify->add_option("--format", format, "json (default) or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    }
};

std::optional<GaussianRational> parse_lambda_option(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    return parse_gaussian(text);
}

ordered_json base_object(const std::vector<std::uint64_t>& generators,
                         const std::string& family, ordered_json params) {
    ordered_json obj;
    obj["generators"] = json_generators(generators);
    obj["family"] = family;
    obj["params"] = std::move(params);
    return obj;
}

int run_gaps(const Cli& cli, std::ostream& out, std::uint64_t max_cells) {
    GeneratorSet set = make_generators(cli.gens);
    std::optional<GaussianRational> lambda = parse_lambda_option(cli.lambda_text);
    GapReport report = oracle_report(set, lambda, max_cells);
    ordered_json obj = base_object(set.values(), "generic", ordered_json::object());
    obj["g"] = json_int(report.g);
    obj["n"] = json_int(report.n);
    obj["s"] = json_int(report.s);
    if (lambda) {
        obj["lambda"] = to_string(*lambda);
        obj["weighted"] = json_weighted(*report.weighted);
    }
    ordered_json gaps_json = ordered_json::array();
    for (std::uint64_t g : *report.gaps) {
        gaps_json.push_back(json_int(g));
    }
    obj["gaps"] = gaps_json;
    CheckState check;
    return emit(out, obj, check);
}

int run_report(const Cli& cli, std::ostream& out, std::uint64_t max_cells) {
    GeneratorSet set = make_generators(cli.gens);
    std::optional<GaussianRational> lambda = parse_lambda_option(cli.lambda_text);
    AperyTable table = apery_set(set);
    BigInt g = g_from_apery(table);
    BigInt n = n_from_apery(table);
    BigInt s = s_from_apery(table);
    std::optional<GaussianRational> weighted;
    if (lambda) {
        weighted = weighted_sum_from_apery(table, *lambda);
    }

    ordered_json obj = base_object(set.values(), "generic", ordered_json::object());
    obj["g"] = json_int(g);
    obj["n"] = json_int(n);
    obj["s"] = json_int(s);
    if (lambda) {
        obj["lambda"] = to_string(*lambda);
        obj["weighted"] = json_weighted(*weighted);
    }
    std::vector<std::uint64_t> gap_list;
    if (cli.list_gaps) {
        gap_list = gaps_from_apery(table);
        ordered_json gaps_json = ordered_json::array();
        for (std::uint64_t v : gap_list) {
            gaps_json.push_back(json_int(v));
        }
        obj["gaps"] = gaps_json;
    }

    CheckState check{cli.check, false};
    if (cli.check) {
        GapReport truth = oracle_report(set, lambda, max_cells);
        append_oracle_block(obj, check, truth, g, n, s, weighted);
        if (cli.list_gaps && truth.gaps && *truth.gaps != gap_list) {
            check.mismatch = true;
            obj["oracle"]["match"] = false;
        }
    }
    return emit(out, obj, check);
}

int run_wsum(const Cli& cli, std::ostream& out, std::uint64_t max_cells) {
    GeneratorSet set = make_generators(cli.gens);
    GaussianRational lambda = parse_gaussian(cli.lambda_text);
    AperyTable table = apery_set(set);
    GaussianRational weighted = weighted_sum_from_apery(table, lambda);

    ordered_json obj = base_object(set.values(), "generic", ordered_json::object());
    obj["lambda"] = to_string(lambda);
    obj["weighted"] = json_weighted(weighted);
    CheckState check{cli.check, false};
    if (cli.check) {
        GapReport truth = oracle_report(set, lambda, max_cells);
        append_oracle_block(obj, check, truth, std::nullopt, std::nullopt,
                            std::nullopt, weighted);
    }
    return emit(out, obj, check);
}

int run_ap(const Cli& cli, std::ostream& out, std::uint64_t max_cells) {
    APParams p = APParams::create(cli.a, cli.d, cli.k);
    BigInt g = roberts_g_ap(p);
    BigInt n = grant_n_ap(p);
    BigInt s = ap_gap_sum(p);
    if (cli.want_g) return emit_bare(out, g);
    if (cli.want_n) return emit_bare(out, n);
    if (cli.want_sum) return emit_bare(out, s);

    std::optional<GaussianRational> lambda = parse_lambda_option(cli.lambda_text);
    std::optional<GaussianRational> weighted;
    if (lambda) {
        weighted = ap_weighted_gap_sum(p, *lambda);
    }

    ordered_json params{{"a", json_int(p.a)}, {"d", json_int(p.d)},
                        {"k", json_int(p.k)}, {"q", json_int(p.q)},
                        {"r", json_int(p.r)}};
    ordered_json obj = base_object(p.generators(), "ap", params);
    obj["g"] = json_int(g);
    obj["n"] = json_int(n);
    obj["s"] = json_int(s);
    if (lambda) {
        obj["lambda"] = to_string(*lambda);
        obj["weighted"] = json_weighted(*weighted);
    }
    CheckState check{cli.check, false};
    if (cli.check) {
        GapReport truth = oracle_report(GeneratorSet(p.generators()), lambda, max_cells);
        append_oracle_block(obj, check, truth, g, n, s, weighted);
    }
    return emit(out, obj, check);
}

int run_almost(const Cli& cli, std::ostream& out, std::uint64_t max_cells) {
    AlmostAPParams p = AlmostAPParams::create(cli.a, cli.d, cli.h, cli.k);
    BigInt g = selmer_g_almost(p);
    BigInt n = selmer_n_almost(p);
    BigInt s = almost_ap_gap_sum(p);
    if (cli.want_g) return emit_bare(out, g);
    if (cli.want_n) return emit_bare(out, n);
    if (cli.want_sum) return emit_bare(out, s);

    ordered_json params{{"a", json_int(p.a)}, {"d", json_int(p.d)},
                        {"h", json_int(p.h)}, {"k", json_int(p.k)},
                        {"q", json_int(p.q)}, {"r", json_int(p.r)}};
    ordered_json obj = base_object(p.generators(), "almost-ap", params);
    obj["g"] = json_int(g);
    obj["n"] = json_int(n);
    obj["s"] = json_int(s);
    CheckState check{cli.check, false};
    if (cli.check) {
        GapReport truth =
            oracle_report(GeneratorSet(p.generators()), std::nullopt, max_cells);
        append_oracle_block(obj, check, truth, g, n, s, std::nullopt);
    }
    return emit(out, obj, check);
}

int run_extra(const Cli& cli, std::ostream& out, std::uint64_t max_cells) {
    ExtraTermParams p = decompose_extra(cli.a, cli.d, cli.k, cli.K);
    BigInt s = extra_term_gap_sum(p);
    if (cli.want_sum) return emit_bare(out, s);

    ordered_json params{{"a", json_int(p.a)},         {"d", json_int(p.d)},
                        {"k", json_int(p.k)},         {"K", json_int(p.K)},
                        {"q", json_int(p.q)},         {"r", json_int(p.r)},
                        {"alpha", json_int(p.alpha)}, {"beta", json_int(p.beta)},
                        {"gamma", json_int(p.gamma)}, {"delta", json_int(p.delta)}};
    ordered_json obj = base_object(p.generators(), "extra", params);
    obj["s"] = json_int(s);
    CheckState check{cli.check, false};
    if (cli.check) {
        GapReport truth =
            oracle_report(GeneratorSet(p.generators()), std::nullopt, max_cells);
        append_oracle_block(obj, check, truth, std::nullopt, std::nullopt, s,
                            std::nullopt);
    }
    return emit(out, obj, check);
}

int run_geom(const Cli& cli, std::ostream& out, std::uint64_t max_cells) {
    GeomParams p = GeomParams::create(cli.a, cli.k);
    BigInt s = geometric_gap_sum(p);
    if (cli.want_sum) return emit_bare(out, s);

    ordered_json params{{"a", json_int(p.a)}, {"k", json_int(p.k)},
                        {"q", json_int(p.q)}, {"r", json_int(p.r)}};
    ordered_json obj = base_object(p.generators(), "geom", params);
    obj["s"] = json_int(s);
    CheckState check{cli.check, false};
    if (cli.check) {
        GapReport truth =
            oracle_report(GeneratorSet(p.generators()), std::nullopt, max_cells);
        append_oracle_block(obj, check, truth, std::nullopt, std::nullopt, s,
                            std::nullopt);
    }
    return emit(out, obj, check);
}

int run_quadruple(const Cli& cli, std::ostream& out, std::uint64_t max_cells) {
    BigInt s = quadruple_gap_sum(cli.a, cli.c);
    BigInt g = dm_g_quadruple(cli.a, cli.c);
    if (cli.want_sum) return emit_bare(out, s);
    if (cli.want_g) return emit_bare(out, g);

    ordered_json params{{"a", json_int(cli.a)}, {"c", json_int(cli.c)}};
    std::vector<std::uint64_t> gens{cli.a, cli.a + 1, cli.a + 2, cli.a + cli.c};
    ordered_json obj = base_object(gens, "quadruple", params);
    obj["g"] = json_int(g);
    obj["s"] = json_int(s);
    CheckState check{cli.check, false};
    if (cli.check) {
        GapReport truth = oracle_report(GeneratorSet(gens), std::nullopt, max_cells);
        append_oracle_block(obj, check, truth, g, std::nullopt, s, std::nullopt);
    }
    return emit(out, obj, check);
}

int run_verify(const Cli& cli, std::ostream& out, std::ostream& err,
               std::uint64_t max_cells) {
    VerifyOptions options;
    options.jobs = cli.jobs;
    options.max_cells = max_cells;
    auto pick = [](std::uint64_t value, std::uint64_t fallback) {
        return value == 0 ? fallback : value;
    };

    auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    if (cli.family == "ap") {
        report = verify_ap(pick(cli.max_a, 30), pick(cli.max_d, 8), options);
    } else if (cli.family == "almost-ap") {
        report = verify_almost_ap(pick(cli.max_a, 20), pick(cli.max_d, 5),
                                  pick(cli.max_h, 4), options);
    } else if (cli.family == "weighted-ap") {
        report = verify_weighted_ap(pick(cli.max_a, 20), pick(cli.max_d, 8), options);
    } else if (cli.family == "extra") {
        report = verify_extra(pick(cli.max_K, 12), pick(cli.max_a, 30),
                              pick(cli.max_d, 5), pick(cli.quad_max_a, 60), options);
    } else if (cli.family == "geom") {
        std::vector<std::uint64_t> ks = cli.ks.empty() ? std::vector<std::uint64_t>{2, 3, 4}
                                                       : cli.ks;
        report = verify_geom(pick(cli.max_a, 300), ks, options);
    } else {
        report = verify_generic(pick(cli.cases, 500), pick(cli.max_a1, 60),
                                cli.seed, options);
    }
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return emit_verify(out, err, report, cli.format, elapsed);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    Cli cli;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        cli.app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << cli.app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << cli.app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << "run 'frobkit --help' for usage\n";
        return 1;
    }

    try {
        std::uint64_t max_cells = cell_cap_from_env();
        if (cli.cmd_gaps->parsed()) return run_gaps(cli, out, max_cells);
        if (cli.cmd_report->parsed()) return run_report(cli, out, max_cells);
        if (cli.cmd_wsum->parsed()) return run_wsum(cli, out, max_cells);
        if (cli.cmd_ap->parsed()) return run_ap(cli, out, max_cells);
        if (cli.cmd_almost->parsed()) return run_almost(cli, out, max_cells);
        if (cli.cmd_extra->parsed()) return run_extra(cli, out, max_cells);
        if (cli.cmd_geom->parsed()) return run_geom(cli, out, max_cells);
        if (cli.cmd_quadruple->parsed()) return run_quadruple(cli, out, max_cells);
        if (cli.cmd_verify->parsed()) return run_verify(cli, out, err, max_cells);
        err << "error: no subcommand\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace frobkit
