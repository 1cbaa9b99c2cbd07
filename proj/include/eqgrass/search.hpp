#pragma once

// Candidate E-infinity outcomes of an E1 page, and the pruned search that
// intersects them against the other E1 pages of the same Grassmannian.

#include "eqgrass/modalg.hpp"
#include "eqgrass/schubert.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace eqg {

/// A possible differential between two generator bidegrees.  Legal exactly when
/// the supporting element of M2 at (a+1-c, b-d) lies in the negative cone.
struct DifferentialPair {
    Bidegree src;
    Bidegree tgt;
    int src_count = 1;
    int tgt_count = 1;

    int n() const { return tgt.a - src.a; }
    int s() const { return tgt.b - src.b - n(); }
    ShiftMove move() const { return {src, tgt}; }
};

inline bool is_possible_differential(Bidegree src, Bidegree tgt)
{
    return PointCone::in_negative_cone(src.a + 1 - tgt.a, src.b - tgt.b);
}

inline std::vector<DifferentialPair> possible_differentials(const FreeModule& m)
{
    std::vector<DifferentialPair> out;
    auto counts = m.counts();
    for (const auto& [s, ns] : counts)
        for (const auto& [t, nt] : counts)
            if (is_possible_differential(s, t))
                out.push_back({s, t, ns, nt});
    return out;
}

struct Strategy {
    enum class Kind { matchings, closure };

    Kind kind = Kind::closure;
    /// Maximum number of shifts applied along any path; unbounded when empty.
    std::optional<int> depth;

    std::string to_string() const
    {
        std::string s = kind == Kind::closure ? "closure" : "matchings";
        if (depth)
            s += ":" + std::to_string(*depth);
        return s;
    }

    static Strategy parse(std::string_view text)
    {
        Strategy st;
        auto colon = text.find(':');
        auto name = text.substr(0, colon);
        if (name == "closure")
            st.kind = Kind::closure;
        else if (name == "matchings")
            st.kind = Kind::matchings;
        else
            throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
        if (colon != std::string_view::npos) {
            auto d = std::string(text.substr(colon + 1));
            std::size_t used = 0;
            int v = -1;
            try {
                v = std::stoi(d, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != d.size() || v < 0)
                throw std::invalid_argument("invalid strategy depth '" + d + "'");
            st.depth = v;
        }
        return st;
    }

    friend bool operator==(const Strategy&, const Strategy&) = default;
};

struct Budget {
    std::size_t max_modules = 10'000'000;
    std::size_t max_bytes = std::size_t{1} << 30;
    std::chrono::milliseconds wall_clock{0}; // zero means no limit
};

struct SearchOptions {
    Strategy strategy;
    Budget budget;
    unsigned jobs = 1;
};

class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Generators packed as (a << 8 | b), sorted; every module in one search has the
// same number of generators, so modules live back to back in a flat arena.
using code_t = std::uint16_t;

inline code_t pack(Bidegree d) { return static_cast<code_t>((d.a << 8) | d.b); }
inline Bidegree unpack(code_t c) { return {c >> 8, c & 0xff}; }

inline std::vector<code_t> pack(const FreeModule& m)
{
    std::vector<code_t> out;
    out.reserve(m.size());
    for (const auto& d : m.generators()) {
        if (d.a > 255 || d.b > 255)
            throw std::invalid_argument("bidegree " + to_string(d) + " too large for the search encoding");
        out.push_back(pack(d));
    }
    return out;
}

inline FreeModule unpack(const code_t* codes, std::size_t n)
{
    std::vector<Bidegree> g;
    g.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        g.push_back(unpack(codes[i]));
    return FreeModule(std::move(g));
}

class budget_guard {
public:
    explicit budget_guard(const Budget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    void check(std::size_t modules, std::size_t bytes)
    {
        if (modules > budget_.max_modules)
            throw budget_exceeded("module budget exceeded: more than " +
                                  std::to_string(budget_.max_modules) + " modules");
        if (bytes > budget_.max_bytes)
            throw budget_exceeded("memory budget exceeded: more than " +
                                  std::to_string(budget_.max_bytes) + " bytes");
        if (budget_.wall_clock.count() > 0 && (++ticks_ & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() - start_ > budget_.wall_clock)
            throw budget_exceeded("wall-clock budget exceeded: " +
                                  std::to_string(budget_.wall_clock.count()) + " ms");
    }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t ticks_ = 0;
};

/// Deduplicating store of fixed-width packed modules (open addressing).
class module_table {
public:
    explicit module_table(std::size_t width) : width_(width), slots_(1024, 0) {}

    std::size_t size() const { return count_; }
    std::size_t width() const { return width_; }
    std::size_t bytes() const
    {
        return arena_.capacity() * sizeof(code_t) + slots_.capacity() * sizeof(std::uint32_t);
    }
    const code_t* at(std::size_t idx) const { return arena_.data() + idx * width_; }

    bool insert(const code_t* codes)
    {
        if ((count_ + 1) * 2 > slots_.size())
            grow();
        std::size_t mask = slots_.size() - 1;
        std::size_t h = hash(codes) & mask;
        while (slots_[h] != 0) {
            if (std::equal(codes, codes + width_, at(slots_[h] - 1)))
                return false;
            h = (h + 1) & mask;
        }
        if (count_ >= 0xffffffffu - 1)
            throw budget_exceeded("module table index space exhausted");
        arena_.insert(arena_.end(), codes, codes + width_);
        slots_[h] = static_cast<std::uint32_t>(++count_);
        return true;
    }

    std::vector<FreeModule> modules() const
    {
        std::vector<FreeModule> out;
        out.reserve(count_);
        for (std::size_t i = 0; i < count_; ++i)
            out.push_back(unpack(at(i), width_));
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::size_t hash(const code_t* codes) const
    {
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < width_; ++i) {
            h ^= codes[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }

    void grow()
    {
        std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
        std::size_t mask = fresh.size() - 1;
        for (std::uint32_t s : slots_) {
            if (s == 0)
                continue;
            std::size_t h = hash(at(s - 1)) & mask;
            while (fresh[h] != 0)
                h = (h + 1) & mask;
            fresh[h] = s;
        }
        slots_.swap(fresh);
    }

    std::size_t width_;
    std::size_t count_ = 0;
    std::vector<code_t> arena_;
    std::vector<std::uint32_t> slots_;
};

// Appends every single-shift successor of `codes` to `out`.
inline void expand(const code_t* codes, std::size_t width, std::vector<code_t>& out)
{
    // distinct bidegrees, each with the position of its first copy
    code_t distinct[1024];
    std::size_t first[1024];
    std::size_t nd = 0;
    for (std::size_t i = 0; i < width; ++i) {
        if (nd == 0 || distinct[nd - 1] != codes[i]) {
            if (nd == 1024)
                throw std::invalid_argument("too many distinct bidegrees");
            distinct[nd] = codes[i];
            first[nd] = i;
            ++nd;
        }
    }
    for (std::size_t u = 0; u < nd; ++u) {
        Bidegree s = unpack(distinct[u]);
        for (std::size_t v = u + 1; v < nd; ++v) {
            Bidegree t = unpack(distinct[v]);
            if (!is_possible_differential(s, t))
                continue;
            const int n = t.a - s.a;
            const int up = t.b - s.b - n;
            std::size_t base = out.size();
            out.insert(out.end(), codes, codes + width);
            code_t* buf = out.data() + base;
            buf[first[u]] = pack({s.a, s.b + up});
            buf[first[v]] = pack({t.a, s.b + n});
            std::sort(buf, buf + width);
        }
    }
}

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn)
{
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n && !failed.load();) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true))
                        failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

inline std::vector<FreeModule> closure_outcomes(const FreeModule& start, const SearchOptions& opt)
{
    auto seed = pack(start);
    const std::size_t width = seed.size();
    module_table table(width);
    budget_guard guard(opt.budget);
    table.insert(seed.data());

    constexpr std::size_t block = 4096;
    const unsigned jobs = std::max(1u, opt.jobs);
    std::size_t begin = 0, end = table.size();
    int level = 0;
    std::vector<code_t> current;
    while (begin < end && (!opt.strategy.depth || level < *opt.strategy.depth)) {
        for (std::size_t lo = begin; lo < end; lo += block) {
            std::size_t hi = std::min(end, lo + block);
            // copy out: inserting may reallocate the arena
            current.assign(table.at(lo), table.at(lo) + (hi - lo) * width);
            std::size_t parts = std::min<std::size_t>(jobs, hi - lo);
            std::vector<std::vector<code_t>> produced(parts);
            parallel_for(parts, jobs, [&](std::size_t part) {
                std::size_t a = (hi - lo) * part / parts, b = (hi - lo) * (part + 1) / parts;
                for (std::size_t i = a; i < b; ++i)
                    expand(current.data() + i * width, width, produced[part]);
            });
            for (const auto& buf : produced) {
                for (std::size_t off = 0; off < buf.size(); off += width) {
                    table.insert(buf.data() + off);
                    guard.check(table.size(), table.bytes() + current.capacity() * sizeof(code_t));
                }
            }
        }
        begin = end;
        end = table.size();
        ++level;
    }
    return table.modules();
}

inline std::vector<FreeModule> matching_outcomes(const FreeModule& start, const SearchOptions& opt)
{
    auto counts = start.counts();
    auto pairs = possible_differentials(start);
    auto index_of = [&](Bidegree d) {
        return static_cast<std::size_t>(
            std::lower_bound(counts.begin(), counts.end(), std::make_pair(d, 0),
                             [](const auto& l, const auto& r) { return l.first < r.first; }) -
            counts.begin());
    };
    std::vector<int> remaining;
    for (const auto& c : counts)
        remaining.push_back(c.second);
    std::vector<int> chosen(pairs.size(), 0);

    module_table table(start.size());
    budget_guard guard(opt.budget);
    std::size_t visited = 0;
    const int max_shifts = opt.strategy.depth.value_or(1 << 30);
    std::vector<code_t> leaf;

    std::function<void(std::size_t, int)> rec = [&](std::size_t e, int used) {
        if (++visited > opt.budget.max_modules)
            throw budget_exceeded("module budget exceeded while enumerating matchings");
        if (e == pairs.size()) {
            std::vector<Bidegree> g;
            for (std::size_t i = 0; i < counts.size(); ++i)
                g.insert(g.end(), static_cast<std::size_t>(remaining[i]), counts[i].first);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                const auto& pr = pairs[i];
                g.insert(g.end(), static_cast<std::size_t>(chosen[i]), Bidegree{pr.src.a, pr.src.b + pr.s()});
                g.insert(g.end(), static_cast<std::size_t>(chosen[i]), Bidegree{pr.tgt.a, pr.src.b + pr.n()});
            }
            leaf = pack(FreeModule(std::move(g)));
            table.insert(leaf.data());
            guard.check(table.size(), table.bytes());
            return;
        }
        const auto si = index_of(pairs[e].src), ti = index_of(pairs[e].tgt);
        const int most = std::min({remaining[si], remaining[ti], max_shifts - used});
        for (int m = 0; m <= most; ++m) {
            chosen[e] = m;
            remaining[si] -= m;
            remaining[ti] -= m;
            rec(e + 1, used + m);
            remaining[si] += m;
            remaining[ti] += m;
        }
        chosen[e] = 0;
    };
    rec(0, 0);
    return table.modules();
}

} // namespace detail

/// All modules this page could converge to, sorted canonically; always contains `m`.
inline std::vector<FreeModule> candidate_outcomes(const FreeModule& m, const SearchOptions& opt = {})
{
    if (m.empty())
        return {m};
    return opt.strategy.kind == Strategy::Kind::closure ? detail::closure_outcomes(m, opt)
                                                        : detail::matching_outcomes(m, opt);
}

/// Indices of the pages that do not relax to some other page of the list.
inline std::vector<std::size_t> reduce_page_indices(const std::vector<FreeModule>& pages)
{
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < pages.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < pages.size() && !redundant; ++j)
            redundant = j != i && pages[i] != pages[j] && can_relax_to(pages[i], pages[j]);
        if (!redundant)
            keep.push_back(i);
    }
    return keep;
}

inline std::vector<FreeModule> reduce_pages(const std::vector<FreeModule>& pages)
{
    std::vector<FreeModule> out;
    for (auto i : reduce_page_indices(pages))
        out.push_back(pages[i]);
    return out;
}

struct FilterStep {
    std::size_t page = 0;             // index into SolveReport::pages
    std::vector<std::size_t> removed; // indices into SolveReport::candidates

    friend bool operator==(const FilterStep&, const FilterStep&) = default;
};

struct SolveReport {
    GrassmannParams params;
    Strategy strategy;
    std::vector<FreeModule> pages; // lowest tension first
    std::vector<coef_t> tensions;
    std::size_t chosen = 0;
    std::vector<std::size_t> reduced; // pages kept as filters, in filtering order
    std::vector<FreeModule> candidates;
    std::vector<FilterStep> log;
    std::vector<std::size_t> survivors; // indices into candidates
    bool complete = true;
    std::string abort_reason;

    std::vector<FreeModule> survivor_modules() const
    {
        std::vector<FreeModule> out;
        for (auto i : survivors)
            out.push_back(candidates[i]);
        return out;
    }

    friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

/// Filtering step: keeps candidates that page `e` can relax to; returns removed indices.
inline std::vector<std::size_t> filter_against(const FreeModule& e, const std::vector<FreeModule>& cands,
                                               std::vector<std::size_t>& alive, unsigned jobs)
{
    std::vector<char> ok(alive.size(), 0);
    detail::parallel_for(alive.size(), jobs, [&](std::size_t i) { ok[i] = can_relax_to(e, cands[alive[i]]); });
    std::vector<std::size_t> kept, removed;
    for (std::size_t i = 0; i < alive.size(); ++i)
        (ok[i] ? kept : removed).push_back(alive[i]);
    alive.swap(kept);
    return removed;
}

/// The pruned search: candidates from the lowest-tension E1 page, filtered by
/// every non-redundant remaining page.  Budget aborts return a partial report
/// with complete == false.
inline SolveReport solve(int k, int p, int q, const SearchOptions& opt = {})
{
    if (p < 2 || k < 1 || k > p - 1 || q < 0 || q > p)
        throw std::invalid_argument("solve needs 1 <= k <= p-1 and 0 <= q <= p");

    SolveReport rep;
    rep.params = {k, p, q};
    rep.strategy = opt.strategy;
    rep.pages = unique_e1_pages(k, p, q);
    for (const auto& pg : rep.pages)
        rep.tensions.push_back(tension(pg));
    rep.chosen = 0;

    try {
        rep.candidates = candidate_outcomes(rep.pages[0], opt);
    } catch (const budget_exceeded& e) {
        rep.complete = false;
        rep.abort_reason = e.what();
        return rep;
    }

    std::vector<FreeModule> rest(rep.pages.begin() + 1, rep.pages.end());
    for (auto i : reduce_page_indices(rest))
        rep.reduced.push_back(i + 1);
    // highest tension first
    std::sort(rep.reduced.begin(), rep.reduced.end(), [&](std::size_t l, std::size_t r) {
        return tension_less(rep.pages[r], rep.pages[l]);
    });

    std::vector<std::size_t> alive(rep.candidates.size());
    for (std::size_t i = 0; i < alive.size(); ++i)
        alive[i] = i;
    for (auto pi : rep.reduced)
        rep.log.push_back({pi, filter_against(rep.pages[pi], rep.candidates, alive, opt.jobs)});
    rep.survivors = alive;
    return rep;
}

/// Re-applies the logged eliminations to the raw candidate list.
inline std::vector<std::size_t> replay_log(const SolveReport& rep)
{
    std::vector<char> dead(rep.candidates.size(), 0);
    for (const auto& step : rep.log)
        for (auto i : step.removed)
            dead.at(i) = 1;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dead.size(); ++i)
        if (!dead[i])
            out.push_back(i);
    return out;
}

/// Keeps the candidates reachable from h_sub + e1_q by Kronholm shifts.
inline std::vector<FreeModule> subspace_filter(const std::vector<FreeModule>& cands, const FreeModule& h_sub,
                                               const FreeModule& e1_q)
{
    const FreeModule base = direct_sum(h_sub, e1_q);
    std::vector<FreeModule> out;
    for (const auto& c : cands)
        if (can_relax_to(base, c))
            out.push_back(c);
    return out;
}

} // namespace eqg
