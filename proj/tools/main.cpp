#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include "cliffpoint/reports.hpp"

using namespace cliffpoint;

namespace {

enum class OutputMode { Text, JsonFmt, Csv };

struct GlobalOpts {
    int digits = 0; // 0 = per-module default
    std::string output = "text";
    std::int64_t sieve_limit = SieveCache::kDefaultLimit;
    std::string cache_dir;

    OutputMode mode() const {
        if (output == "json")
            return OutputMode::JsonFmt;
        if (output == "csv")
            return OutputMode::Csv;
        if (output == "text")
            return OutputMode::Text;
        throw usage_error("unknown output mode '" + output + "'");
    }

    PrecisionContext ctx() const {
        return PrecisionContext(digits > 0 ? digits : PrecisionContext::kDefaultDigits);
    }

    std::string cache_path() const {
        std::string dir = cache_dir;
        if (dir.empty()) {
            const char* env = std::getenv("CLIFFPOINT_CACHE");
            dir = env ? env : ".";
        }
        return dir + "/sieve_" + std::to_string(sieve_limit) + ".svc";
    }

    SieveCache sieve() const { return SieveCache::load_or_build(cache_path(), sieve_limit); }
};

void emit(const Json& envelope, OutputMode mode) {
    if (mode == OutputMode::JsonFmt) {
        std::cout << envelope.dump(2) << "\n";
        return;
    }
    if (mode == OutputMode::Csv) {
        // flat key,value rows; arrays of row objects become csv tables
        const Json& out = envelope["outputs"];
        if (out.contains("rows") && out["rows"].is_array() && !out["rows"].empty()) {
            const Json& first = out["rows"][0];
            std::string header;
            for (auto it = first.begin(); it != first.end(); ++it) {
                if (it.value().is_structured())
                    continue;
                header += (header.empty() ? "" : ",") + it.key();
            }
            std::cout << header << "\n";
            for (const Json& row : out["rows"]) {
                std::string line;
                bool leading = true;
                for (auto it = row.begin(); it != row.end(); ++it) {
                    if (it.value().is_structured())
                        continue;
                    if (!leading)
                        line += ",";
                    leading = false;
                    line += it.value().is_string() ? it.value().get<std::string>()
                                                   : it.value().dump();
                }
                std::cout << line << "\n";
            }
        } else {
            for (auto it = out.begin(); it != out.end(); ++it)
                if (!it.value().is_structured())
                    std::cout << it.key() << ","
                              << (it.value().is_string() ? it.value().get<std::string>()
                                                         : it.value().dump())
                              << "\n";
        }
        return;
    }
    // text: walk the outputs tree
    std::function<void(const Json&, int)> walk = [&](const Json& node, int depth) {
        std::string pad(static_cast<size_t>(depth) * 2, ' ');
        for (auto it = node.begin(); it != node.end(); ++it) {
            if (it.value().is_object()) {
                std::cout << pad << it.key() << ":\n";
                walk(it.value(), depth + 1);
            } else if (it.value().is_array() && !it.value().empty() &&
                       it.value().front().is_object()) {
                std::cout << pad << it.key() << ":\n";
                for (const Json& row : it.value()) {
                    std::cout << pad << "  -\n";
                    walk(row, depth + 2);
                }
            } else {
                std::cout << pad << it.key() << " = "
                          << (it.value().is_string() ? it.value().get<std::string>()
                                                     : it.value().dump())
                          << "\n";
            }
        }
    };
    std::cout << envelope["command"].get<std::string>() << "\n";
    walk(envelope["outputs"], 0);
    if (!envelope["rigorous"].get<bool>())
        std::cout << "note: estimates only; not rigorous\n";
}

// Table layout used in the crossing table: (K, J) per m.
std::pair<std::int64_t, int> table_params(long m) {
    static const std::map<long, std::pair<std::int64_t, int>> kKnown = {
        {1, {100, 1}},   {2, {100, 1}},   {3, {1000, 1}},  {4, {1000, 2}},  {5, {1000, 3}},
        {6, {1000, 3}},  {7, {1000, 4}},  {8, {1000, 5}},  {9, {1000, 6}},  {10, {1000, 7}},
        {11, {1000, 8}}, {12, {1000, 8}}, {13, {1000, 10}}, {14, {1000, 10}}, {15, {1000, 11}},
        {16, {1000, 12}}, {17, {1000, 13}}, {18, {1000, 14}}, {19, {1000, 15}}, {20, {1000, 16}},
        {100, {50000, 60}},
    };
    auto it = kKnown.find(m);
    if (it != kKnown.end())
        return it->second;
    // unlisted m: generous defaults, order grows with m
    return {m <= 20 ? 1000 : 50000, static_cast<int>(m * 4 / 5) + 2};
}

std::pair<long, long> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        long v = std::stol(text);
        return {v, v};
    }
    long lo = std::stol(text.substr(0, dots));
    long hi = std::stol(text.substr(dots + 2));
    if (lo < 1 || hi < lo)
        throw usage_error("bad range '" + text + "'");
    return {lo, hi};
}

int cmd_table1(const GlobalOpts& g, const std::string& range, std::int64_t k_override,
               int j_override, const std::string& threshold_text) {
    auto [lo, hi] = parse_range(range);
    if (lo < 1 || hi > 100)
        throw usage_error("m must lie in 1..100");

    Threshold threshold =
        threshold_text.empty() ? Threshold::two_pi() : Threshold::decimal(threshold_text);

    std::vector<std::future<CrossingResult>> jobs;
    for (long m = lo; m <= hi; ++m) {
        EmParams params;
        auto [k, j] = table_params(m);
        params.initial_terms = k_override > 0 ? k_override : k;
        params.order = j_override > 0 ? j_override : j;
        params.threshold = threshold;
        if (g.digits > 0)
            params.ctx = PrecisionContext(g.digits);
        jobs.push_back(std::async(std::launch::async, [m, params] {
            return solve_crossing(SeriesSpec(m, 1), params);
        }));
    }

    Json rows = Json::array();
    bool all_ok = true;
    int digits_used = 0;
    for (long m = lo; m <= hi; ++m) {
        CrossingResult r = jobs[static_cast<size_t>(m - lo)].get();
        all_ok = all_ok && r.all_checks();
        digits_used = std::max(digits_used, r.digits_used);
        Json row = to_json(r);
        row.erase("checks");
        Json ordered{{"m", m}};
        ordered.update(row);
        ordered["all_checks"] = r.all_checks();
        rows.push_back(std::move(ordered));
    }

    Json envelope = report_envelope(
        "table1",
        Json{{"m", range},
             {"k", k_override},
             {"j", j_override},
             {"threshold", threshold.describe()}},
        Json{{"rows", std::move(rows)}}, digits_used, all_ok);
    emit(envelope, g.mode());
    return all_ok ? 0 : 3;
}

int cmd_sinc_check(const GlobalOpts& g, int odd_n, const std::string& const_value, int count,
                   const std::string& list_text) {
    const PrecisionContext ctx = g.ctx();
    int selectors = (odd_n >= 0) + !const_value.empty() + !list_text.empty();
    if (selectors != 1)
        throw usage_error("choose exactly one of --odd, --const, --list");

    SincSequence seq = [&] {
        if (odd_n >= 0)
            return SincSequence::odd_reciprocals(odd_n, ctx);
        if (!const_value.empty())
            return SincSequence::constant(BigReal::from_decimal(const_value, ctx), count);
        std::vector<std::string> parts;
        std::stringstream ss(list_text);
        for (std::string item; std::getline(ss, item, ',');)
            parts.push_back(item);
        return SincSequence::from_decimals(parts, ctx);
    }();

    IdentityReport rep = identity_check(seq, ctx);
    Json envelope = report_envelope(
        "sinc-check",
        Json{{"odd", odd_n}, {"const", const_value}, {"count", count}, {"list", list_text},
             {"length", seq.size()}},
        to_json(rep), rep.digits_used, true);
    emit(envelope, g.mode());

    const bool observed_equal = abs(rep.difference) < pow10_neg(ctx.digits() - 12, ctx);
    return rep.condition_holds == observed_equal ? 0 : 3;
}

int cmd_mertens(const GlobalOpts& g, std::int64_t q, std::int64_t a, double x_flag) {
    const PrecisionContext ctx = g.ctx();
    const auto x = static_cast<std::int64_t>(x_flag);
    APClass ap(q, a);
    SieveCache cache = g.sieve();
    MertensEstimate est = mertens_estimate(ap, x, ctx, cache);
    Json envelope = report_envelope("mertens", Json{{"q", q}, {"a", a}, {"x", x}},
                                    to_json(est), ctx.digits(), false);
    emit(envelope, g.mode());
    return 0;
}

const std::vector<std::tuple<const char*, std::int64_t, std::int64_t, const char*>>&
published_mertens() {
    // Languasco-Zaccagnini values for the worked progressions
    static const std::vector<std::tuple<const char*, std::int64_t, std::int64_t, const char*>>
        kTable = {
            {"3n+1", 3, 1, "-0.3568904795"},
            {"10n+1", 10, 1, "-0.2088344774302376"},
            {"10n+3", 10, 3, "0.1386504057476469"},
            {"10n+7", 10, 7, "-0.1039035249178728"},
            {"10n+9", 10, 9, "-0.2644151905518937"},
            {"100n+1", 100, 1,
             "-0.0327328506433100964865591320930048072116438944230"
             "5808121239698784116683056664327790581593738706166"
             "32469149389219354796589435060666487892"},
        };
    return kTable;
}

int cmd_cutoff(const GlobalOpts& g, std::int64_t q, std::int64_t a, const std::string& mqa_text,
               const std::string& mqa_file, bool estimate, double x_flag, bool all_primes,
               bool examples) {
    const PrecisionContext ctx = g.ctx();

    if (all_primes) {
        CutoffEstimate est = all_primes_cutoff(ctx);
        Json envelope = report_envelope("cutoff", Json{{"all_primes", true}}, to_json(est),
                                        est.digits_used, false);
        emit(envelope, g.mode());
        return 0;
    }

    if (examples) {
        Json rows = Json::array();
        int digits_used = 0;
        for (const auto& [name, eq, ea, value] : published_mertens()) {
            CutoffEstimate est = cutoff_from_mertens(APClass(eq, ea), DecimalConstant(value), ctx);
            Json row{{"progression", name}};
            row.update(to_json(est));
            rows.push_back(std::move(row));
            digits_used = std::max(digits_used, est.digits_used);
        }
        CutoffEstimate ap = all_primes_cutoff(ctx);
        Json row{{"progression", "all primes"}};
        row.update(to_json(ap));
        rows.push_back(std::move(row));
        Json envelope = report_envelope("cutoff", Json{{"examples", true}},
                                        Json{{"rows", std::move(rows)}}, digits_used, false);
        emit(envelope, g.mode());
        return 0;
    }

    if (q <= 0)
        throw usage_error("cutoff requires q and a (or --all-primes / --examples)");
    APClass ap(q, a);

    std::string mqa = mqa_text;
    if (!mqa_file.empty()) {
        std::ifstream in(mqa_file);
        if (!in)
            throw usage_error("cannot read --mqa-file '" + mqa_file + "'");
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        // strip whitespace/newlines so split constants concatenate
        for (char c : {' ', '\n', '\r', '\t'})
            content.erase(std::remove(content.begin(), content.end(), c), content.end());
        mqa = content;
    }
    if (estimate) {
        SieveCache cache = g.sieve();
        MertensEstimate est =
            mertens_estimate(ap, static_cast<std::int64_t>(x_flag), ctx, cache);
        mqa = est.value.to_decimal(est.value.digits());
    }
    if (mqa.empty())
        throw usage_error("cutoff requires --mqa, --mqa-file, or --estimate");

    CutoffEstimate est = cutoff_from_mertens(ap, DecimalConstant(mqa), ctx);
    Json envelope = report_envelope("cutoff", Json{{"q", q}, {"a", a}, {"mqa", mqa}},
                                    to_json(est), est.digits_used, false);
    emit(envelope, g.mode());
    return 0;
}

TowerReal parse_tower(const std::string& text, const PrecisionContext& ctx) {
    // right-associative caret chains: e^e^e^79, 10^34, 2.5
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, '^');)
        parts.push_back(item);
    if (parts.empty())
        throw usage_error("empty tower literal");

    TowerReal value = TowerReal::from_real(BigReal::from_decimal(parts.back(), ctx));
    for (size_t i = parts.size() - 1; i-- > 0;) {
        if (parts[i] == "e" || parts[i] == "E") {
            value = TowerReal::normalize(value.height() + 1, value.top());
        } else if (parts[i] == "10") {
            if (value.height() > 0)
                throw usage_error("10^x towers supported only for plain exponents; use e^ chains");
            value = TowerReal::from_log10(value.top());
        } else {
            throw usage_error("tower base must be 'e' or '10', got '" + parts[i] + "'");
        }
    }
    return value;
}

int cmd_towers(const GlobalOpts& g, const std::string& sub, const std::string& x_text,
               const std::string& y_text) {
    const PrecisionContext ctx = g.ctx();
    NamedConstants consts(ctx);

    Json outputs;
    std::string command = "towers " + sub;
    if (sub == "skewes") {
        outputs = to_json(skewes_report(consts));
    } else if (sub == "section8") {
        outputs = to_json(section8_report(consts));
    } else if (sub == "lemmas") {
        outputs = to_json(inequality_lemmas(ctx));
    } else if (sub == "compare") {
        if (x_text.empty() || y_text.empty())
            throw usage_error("towers compare needs two tower literals");
        TowerReal x = parse_tower(x_text, ctx);
        TowerReal y = parse_tower(y_text, ctx);
        Ordering ord = compare(x, y);
        outputs = Json{
            {"x", to_json(x)},
            {"y", to_json(y)},
            {"ordering", ord == Ordering::Less      ? "less"
                         : ord == Ordering::Greater ? "greater"
                                                    : "equal"},
        };
    } else {
        throw usage_error("unknown towers subreport '" + sub + "'");
    }

    Json envelope = report_envelope(command, Json{{"x", x_text}, {"y", y_text}},
                                    std::move(outputs), ctx.digits(), false);
    emit(envelope, g.mode());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cliffpoint: where slowly divergent series push the sinc identity off its cliff"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--digits", g.digits, "working precision override (decimal digits)");
    app.add_option("--output", g.output, "text | json | csv")->capture_default_str();
    app.add_option("--sieve-limit", g.sieve_limit, "sieve cache limit")->capture_default_str();
    app.add_option("--cache-dir", g.cache_dir, "sieve cache directory (or CLIFFPOINT_CACHE)");

    auto* table1 = app.add_subcommand("table1", "largest M with sum 1/(mk+1) below the threshold");
    std::string range = "1..20", threshold_text;
    std::int64_t k_override = 0;
    int j_override = 0;
    table1->add_option("--m", range, "single m or range like 1..20")->capture_default_str();
    table1->add_option("--k", k_override, "override the directly-summed term count");
    table1->add_option("--j", j_override, "override the correction order");
    table1->add_option("--threshold", threshold_text, "decimal threshold (default 2pi)");

    auto* sinc = app.add_subcommand("sinc-check", "evaluate both sides of the sinc identity");
    int odd_n = -1, count = 1;
    std::string const_value, list_text;
    sinc->add_option("--odd", odd_n, "a_k = 1/(2k+1) for k = 0..N");
    sinc->add_option("--const", const_value, "constant coefficient value");
    sinc->add_option("--count", count, "how many constant coefficients");
    sinc->add_option("--list", list_text, "comma-separated coefficients");

    auto* mertens = app.add_subcommand("mertens", "empirical M(q,a) from summation to x");
    std::int64_t mq = 0, ma = 0;
    double x_flag = 1e7;
    mertens->add_option("q", mq, "modulus")->required();
    mertens->add_option("a", ma, "residue")->required();
    mertens->add_option("--x", x_flag, "summation bound")->capture_default_str();

    auto* cutoff = app.add_subcommand("cutoff", "estimate the index where the sum passes 2pi");
    std::int64_t cq = 0, ca = 0;
    std::string mqa_text, mqa_file;
    bool estimate = false, all_primes = false, examples = false;
    double cx_flag = 1e7;
    cutoff->add_option("q", cq, "modulus");
    cutoff->add_option("a", ca, "residue");
    cutoff->add_option("--mqa", mqa_text, "published M(q,a) as a decimal literal");
    cutoff->add_option("--mqa-file", mqa_file, "file holding the M(q,a) literal");
    cutoff->add_flag("--estimate", estimate, "estimate M(q,a) by summation first");
    cutoff->add_option("--x", cx_flag, "summation bound for --estimate")->capture_default_str();
    cutoff->add_flag("--all-primes", all_primes, "the unrestricted-primes cutoff");
    cutoff->add_flag("--examples", examples, "reproduce the published worked progressions");

    auto* towers = app.add_subcommand("towers", "level-index reports and comparisons");
    std::string sub, x_text, y_text;
    towers->add_option("report", sub, "skewes | section8 | lemmas | compare")->required();
    towers->add_option("x", x_text, "tower literal, e.g. e^e^e^79");
    towers->add_option("y", y_text, "tower literal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table1->parsed())
            return cmd_table1(g, range, k_override, j_override, threshold_text);
        if (sinc->parsed())
            return cmd_sinc_check(g, odd_n, const_value, count, list_text);
        if (mertens->parsed())
            return cmd_mertens(g, mq, ma, x_flag);
        if (cutoff->parsed())
            return cmd_cutoff(g, cq, ca, mqa_text, mqa_file, estimate, cx_flag, all_primes,
                              examples);
        if (towers->parsed())
            return cmd_towers(g, sub, x_text, y_text);
        throw usage_error("no subcommand given");
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const checks_failed& e) {
        std::cerr << "checks failed: " << e.what() << "\n";
        return 3;
    } catch (const precision_error& e) {
        std::cerr << "precision: " << e.what() << "\n";
        return 3;
    } catch (const cache_error& e) {
        std::cerr << "cache: " << e.what() << "\n";
        return 4;
    } catch (const domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const feasibility_error& e) {
        std::cerr << "out of scale: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
