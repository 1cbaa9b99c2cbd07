#pragma once

// Command-line front end.  run() is the whole program minus process plumbing,
// so it can be driven from tests with string streams.
//
// Exit status: 0 success, 1 several candidates remain after solve or a
// validation check failed, 2 usage error, 3 budget abort.

#include "eqgrass/cache.hpp"
#include "eqgrass/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace eqg::cli {

enum exit_code : int { ok = 0, multiple = 1, usage = 2, aborted = 3 };

class usage_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void check_kpq(int k, int p, int q)
{
    if (p < 2)
        throw usage_error("p must be at least 2, got " + std::to_string(p));
    if (k < 1 || k > p - 1)
        throw usage_error("k must satisfy 1 <= k <= p-1, got k=" + std::to_string(k));
    if (q < 0 || q > p)
        throw usage_error("q must satisfy 0 <= q <= p, got q=" + std::to_string(q));
}

inline SignWord parse_word(const std::string& text, int k)
{
    SignWord w;
    try {
        w = SignWord::parse(text);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    if (w.p() < 2)
        throw usage_error("sign word '" + text + "' must have length at least 2");
    if (k < 1 || k > w.p() - 1)
        throw usage_error("k must satisfy 1 <= k <= " + std::to_string(w.p() - 1) + " for word '" + text +
                          "', got k=" + std::to_string(k));
    return w;
}

inline BiPoly parse_poly(const std::string& text)
{
    try {
        return BiPoly::parse(text);
    } catch (const parse_error& e) {
        throw usage_error(e.what());
    }
}

inline FreeModule parse_module(const std::string& poly, const std::string& module_json)
{
    if (!poly.empty() && !module_json.empty())
        throw usage_error("give either --poly or --module, not both");
    if (!poly.empty()) {
        try {
            return module_from_poly(parse_poly(poly));
        } catch (const usage_error&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
    }
    if (module_json.empty())
        throw usage_error("a module is required (--poly or --module)");
    std::string text = module_json;
    if (text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in)
            throw usage_error("cannot read module file '" + text.substr(1) + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return module_from_json(json::parse(text));
    } catch (const std::exception& e) {
        throw usage_error(std::string("bad module JSON: ") + e.what());
    }
}

inline void print_module(std::ostream& out, const FreeModule& m, const std::string& format)
{
    if (format == "table")
        out << render_rank_table(m);
    else if (format == "poly")
        out << poincare(m).to_string() << '\n';
    else
        out << to_json(m).dump() << '\n';
}

inline void print_modules(std::ostream& out, const std::vector<FreeModule>& ms, const std::string& format,
                          const std::string& noun)
{
    if (format == "json") {
        json arr = json::array();
        for (const auto& m : ms)
            arr.push_back(to_json(m));
        out << arr.dump() << '\n';
        return;
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (format == "table") {
            if (ms.size() > 1)
                out << (i ? "\n" : "") << noun << ' ' << i + 1 << " of " << ms.size() << ":\n";
            out << render_rank_table(ms[i]);
        } else {
            out << poincare(ms[i]).to_string() << '\n';
        }
    }
}

struct SearchFlags {
    std::string strategy = "closure";
    std::size_t max_modules = Budget{}.max_modules;
    std::size_t max_bytes = Budget{}.max_bytes;
    long timeout_ms = 0;
    unsigned jobs = 1;

    void attach(CLI::App* sub)
    {
        sub->add_option("--strategy", strategy, "closure or matchings, optionally :depth")->capture_default_str();
        sub->add_option("--max-modules", max_modules, "abort after this many intermediate modules")
            ->capture_default_str();
        sub->add_option("--max-bytes", max_bytes, "abort when the search store exceeds this size")
            ->capture_default_str();
        sub->add_option("--timeout-ms", timeout_ms, "wall-clock limit for the search, 0 for none")
            ->capture_default_str();
        sub->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    }

    SearchOptions options() const
    {
        SearchOptions o;
        try {
            o.strategy = Strategy::parse(strategy);
        } catch (const std::invalid_argument& e) {
            throw usage_error(e.what());
        }
        o.budget.max_modules = max_modules;
        o.budget.max_bytes = max_bytes;
        o.budget.wall_clock = std::chrono::milliseconds(timeout_ms);
        o.jobs = std::max(1u, jobs);
        return o;
    }
};

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Bredon cohomology of real Grassmannians via Kronholm-shift search", "eqgrass"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    const std::vector<std::string> formats{"table", "poly", "json"};
    int k = 0, p = 0, q = 0, m = -1;
    std::string word, format, poly, module_json, poly_a, poly_b, cache_dir;
    bool normalize_flag = false, no_cache = false;
    detail::SearchFlags search;

    auto add_kpq = [&](CLI::App* sub) {
        sub->add_option("--k", k, "subspace dimension")->required();
        sub->add_option("--p", p, "ambient dimension")->required();
        sub->add_option("--q", q, "number of sign coordinates")->required();
    };

    auto* e1 = app.add_subcommand("e1", "E1 page for one sign word");
    e1->add_option("--k", k)->required();
    e1->add_option("--word", word, "sign word such as ++--")->required();
    e1->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* pages = app.add_subcommand("pages", "distinct E1 pages over all sign words, lowest tension first");
    add_kpq(pages);
    pages->add_flag("--normalize", normalize_flag, "reduce to k, q <= p/2 first");
    pages->add_option("--format", format)->check(CLI::IsMember(formats));

    auto* cands = app.add_subcommand("candidates", "possible E-infinity outcomes of one page");
    cands->add_option("--k", k);
    cands->add_option("--word", word, "use the E1 page of this sign word");
    cands->add_option("--poly", poly, "module given by its Poincare polynomial");
    cands->add_option("--module", module_json, "module JSON, or @file");
    cands->add_option("--format", format)->check(CLI::IsMember(formats));
    search.attach(cands);

    auto* solve_cmd = app.add_subcommand("solve", "run the pruned search for Gr_k(R^{p,q})");
    add_kpq(solve_cmd);
    solve_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
    solve_cmd->add_flag("--normalize", normalize_flag, "reduce to k, q <= p/2 first");
    solve_cmd->add_option("--cache-dir", cache_dir, std::string("cache directory (default $") + cache_dir_env +
                                                        " or ~/.cache/eqgrass)");
    solve_cmd->add_flag("--no-cache", no_cache, "neither read nor write the cache");
    search.attach(solve_cmd);

    auto* story = app.add_subcommand("story", "shift story (P(B) - P(A)) / K(1,1)");
    story->add_option("--a", poly_a, "Poincare polynomial of A")->required();
    story->add_option("--b", poly_b, "Poincare polynomial of B")->required();

    auto* tw = app.add_subcommand("totalweight", "closed-form total weight of Gr_k(R^{p,q})");
    add_kpq(tw);

    auto* validate = app.add_subcommand("validate", "check a module against classical invariants");
    add_kpq(validate);
    validate->add_option("--poly", poly);
    validate->add_option("--module", module_json);

    auto* quotient = app.add_subcommand("quotient", "E1 summands of cells outside the first m coordinates");
    quotient->add_option("--k", k)->required();
    quotient->add_option("--word", word)->required();
    quotient->add_option("--m", m, "length of the sub-word")->required();
    quotient->add_option("--format", format)->check(CLI::IsMember(formats));

    std::vector<std::string> argv{args.rbegin(), args.rend()};
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }

    auto fmt_or = [&](const std::string& def) { return format.empty() ? def : format; };

    try {
        if (e1->parsed()) {
            auto w = detail::parse_word(word, k);
            detail::print_module(out, e1_page(k, w), fmt_or("poly"));
            return exit_code::ok;
        }
        if (pages->parsed()) {
            detail::check_kpq(k, p, q);
            GrassmannParams g{k, p, q};
            if (normalize_flag)
                g = normalize(g);
            auto list = unique_e1_pages(g.k, g.p, g.q);
            const auto f = fmt_or("poly");
            if (f == "json") {
                json arr = json::array();
                for (const auto& pg : list) {
                    json j = to_json(pg);
                    j["tension"] = tension(pg);
                    arr.push_back(j);
                }
                out << arr.dump() << '\n';
            } else {
                for (std::size_t i = 0; i < list.size(); ++i) {
                    if (f == "table")
                        out << (i ? "\n" : "") << "page " << i + 1 << " of " << list.size()
                            << " (tension " << tension(list[i]) << "):\n"
                            << render_rank_table(list[i]);
                    else
                        out << tension(list[i]) << '\t' << poincare(list[i]).to_string() << '\n';
                }
            }
            return exit_code::ok;
        }
        if (cands->parsed()) {
            FreeModule start;
            if (!word.empty()) {
                if (!poly.empty() || !module_json.empty())
                    throw usage_error("give exactly one of --word, --poly, --module");
                start = e1_page(k, detail::parse_word(word, k));
            } else {
                start = detail::parse_module(poly, module_json);
            }
            auto list = candidate_outcomes(start, search.options());
            std::sort(list.begin(), list.end(), tension_less);
            detail::print_modules(out, list, fmt_or("poly"), "candidate");
            return exit_code::ok;
        }
        if (solve_cmd->parsed()) {
            detail::check_kpq(k, p, q);
            GrassmannParams g{k, p, q};
            if (normalize_flag)
                g = normalize(g);
            const auto opt = search.options();
            CacheKey key{g, opt.strategy};
            std::optional<ResultCache> cache;
            if (!no_cache)
                cache.emplace(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir),
                              [&err](const std::string& msg) { err << "warning: " << msg << '\n'; });

            std::optional<SolveReport> rep;
            if (cache)
                rep = cache->load(key);
            if (!rep) {
                rep = solve(g.k, g.p, g.q, opt);
                if (cache && rep->complete) {
                    try {
                        cache->store(key, *rep);
                    } catch (const std::exception& e) {
                        err << "warning: cache write failed: " << e.what() << '\n';
                    }
                }
            }
            const auto f = fmt_or("table");
            if (f == "json")
                out << to_json(*rep).dump(1) << '\n';
            if (!rep->complete) {
                err << "error: search aborted: " << rep->abort_reason << '\n';
                return exit_code::aborted;
            }
            auto survivors = rep->survivor_modules();
            if (f != "json")
                detail::print_modules(out, survivors, f, "candidate");
            if (survivors.size() != 1) {
                err << survivors.size() << " candidates remain\n";
                return exit_code::multiple;
            }
            return exit_code::ok;
        }
        if (story->parsed()) {
            auto a = detail::parse_poly(poly_a), b = detail::parse_poly(poly_b);
            auto s = divide_by_k11(b - a);
            out << (s ? s->to_string() : std::string("not related")) << '\n';
            return exit_code::ok;
        }
        if (tw->parsed()) {
            detail::check_kpq(k, p, q);
            out << total_weight_formula(k, p, q) << '\n';
            return exit_code::ok;
        }
        if (validate->parsed()) {
            detail::check_kpq(k, p, q);
            auto mod = detail::parse_module(poly, module_json);
            auto d = validate_page(mod, k, p, q);
            for (const auto& msg : d.messages)
                out << msg << '\n';
            return d.all_passed() ? exit_code::ok : exit_code::multiple;
        }
        if (quotient->parsed()) {
            auto w = detail::parse_word(word, k);
            if (m < 0 || m > w.p())
                throw usage_error("--m must satisfy 0 <= m <= " + std::to_string(w.p()) + ", got " +
                                  std::to_string(m));
            detail::print_module(out, e1_quotient_page(k, w, m), fmt_or("poly"));
            return exit_code::ok;
        }
    } catch (const budget_exceeded& e) {
        err << "error: search aborted: " << e.what() << '\n';
        return exit_code::aborted;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }
    return exit_code::usage;
}

} // namespace eqg::cli
