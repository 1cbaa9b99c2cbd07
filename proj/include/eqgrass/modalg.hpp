#pragma once

// Free bigraded M2-modules, stored as sorted multisets of bidegrees.

#include "eqgrass/bipoly.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqg {

/// Bidegree (a, b) of a summand Sigma^{a,b} M2: a is topological degree, b the weight.
struct Bidegree {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

inline std::string to_string(Bidegree d)
{
    return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

class FreeModule {
public:
    FreeModule() = default;
    FreeModule(std::initializer_list<Bidegree> gens) : gens_(gens) { normalize(); }
    explicit FreeModule(std::vector<Bidegree> gens) : gens_(std::move(gens)) { normalize(); }

    static FreeModule from_counts(const std::vector<std::pair<Bidegree, int>>& counts)
    {
        std::vector<Bidegree> g;
        for (const auto& [d, n] : counts) {
            if (n <= 0)
                throw std::invalid_argument("generator count must be positive at " + to_string(d));
            g.insert(g.end(), static_cast<std::size_t>(n), d);
        }
        return FreeModule(std::move(g));
    }

    const std::vector<Bidegree>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }

    int count(Bidegree d) const
    {
        auto [lo, hi] = std::equal_range(gens_.begin(), gens_.end(), d);
        return static_cast<int>(hi - lo);
    }

    /// Distinct bidegrees with multiplicities, in ascending (a, b) order.
    std::vector<std::pair<Bidegree, int>> counts() const
    {
        std::vector<std::pair<Bidegree, int>> out;
        for (const auto& d : gens_) {
            if (!out.empty() && out.back().first == d)
                ++out.back().second;
            else
                out.emplace_back(d, 1);
        }
        return out;
    }

    friend FreeModule direct_sum(const FreeModule& l, const FreeModule& r)
    {
        std::vector<Bidegree> g;
        g.reserve(l.size() + r.size());
        std::merge(l.gens_.begin(), l.gens_.end(), r.gens_.begin(), r.gens_.end(),
                   std::back_inserter(g));
        FreeModule m;
        m.gens_ = std::move(g);
        return m;
    }

    friend auto operator<=>(const FreeModule&, const FreeModule&) = default;
    friend bool operator==(const FreeModule&, const FreeModule&) = default;

private:
    void normalize()
    {
        for (const auto& d : gens_)
            if (d.a < 0 || d.b < 0)
                throw std::invalid_argument("negative bidegree " + to_string(d));
        std::sort(gens_.begin(), gens_.end());
    }

    std::vector<Bidegree> gens_;
};

/// A Kronholm shift: (a,b) moves up to (a, b+s) and (c,d) moves down to (c, b+n),
/// where n = c - a and s = d - b - n.
struct ShiftMove {
    Bidegree src;
    Bidegree tgt;

    int n() const { return tgt.a - src.a; }
    int s() const { return tgt.b - src.b - n(); }
    bool legal() const { return n() >= 1 && s() >= 1; }
};

inline BiPoly poincare(const FreeModule& m)
{
    BiPoly p;
    for (const auto& [d, n] : m.counts())
        p.add_term(d.a, d.b, n);
    return p;
}

inline FreeModule module_from_poly(const BiPoly& f)
{
    std::string bad;
    std::vector<std::pair<Bidegree, int>> counts;
    for (const auto& [m, c] : f.terms()) {
        if (c < 0) {
            bad += (bad.empty() ? "" : ", ") + BiPoly::monomial(m.i, m.j, c).to_string();
            continue;
        }
        counts.emplace_back(Bidegree{m.i, m.j}, static_cast<int>(c));
    }
    if (!bad.empty())
        throw std::invalid_argument("polynomial has negative coefficients: " + bad);
    return FreeModule::from_counts(counts);
}

/// Tension: P(M) evaluated at (1, 2).  Every Kronholm shift lowers it.
inline coef_t tension(const FreeModule& m)
{
    coef_t t = 0;
    for (const auto& d : m.generators())
        t = checked::add(t, checked::pow(2, d.b));
    return t;
}

inline coef_t total_weight(const FreeModule& m)
{
    coef_t w = 0;
    for (const auto& d : m.generators())
        w = checked::add(w, d.b);
    return w;
}

/// (P(b) - P(a)) / K(1,1), or nullopt when the difference is outside the Kronholm ideal.
inline std::optional<BiPoly> shift_story(const FreeModule& a, const FreeModule& b)
{
    return divide_by_k11(poincare(b) - poincare(a));
}

/// True iff b is reachable from a by Kronholm shifts (reflexive).
inline bool can_relax_to(const FreeModule& a, const FreeModule& b)
{
    if (a.size() != b.size())
        return false;
    auto story = shift_story(a, b);
    return story && is_nonnegative(*story);
}

inline FreeModule apply_shift(const FreeModule& m, const ShiftMove& mv)
{
    if (!mv.legal())
        throw std::invalid_argument("illegal shift " + to_string(mv.src) + " -> " + to_string(mv.tgt) +
                                    ": need n >= 1 and s >= 1");
    if (m.count(mv.src) == 0)
        throw std::invalid_argument("module has no generator at " + to_string(mv.src));
    if (m.count(mv.tgt) == 0)
        throw std::invalid_argument("module has no generator at " + to_string(mv.tgt));

    std::vector<Bidegree> g = m.generators();
    g.erase(std::find(g.begin(), g.end(), mv.src));
    g.erase(std::find(g.begin(), g.end(), mv.tgt));
    g.push_back({mv.src.a, mv.src.b + mv.s()});
    g.push_back({mv.tgt.a, mv.src.b + mv.n()});
    return FreeModule(std::move(g));
}

/// Rank table: topological degree left to right, weight bottom to top.
inline std::string render_rank_table(const FreeModule& m)
{
    if (m.empty())
        return "(no generators)\n";

    int max_a = 0, max_b = 0, max_count = 0;
    auto counts = m.counts();
    for (const auto& [d, n] : counts) {
        max_a = std::max(max_a, d.a);
        max_b = std::max(max_b, d.b);
        max_count = std::max(max_count, n);
    }
    const int cell = std::max<int>(3, static_cast<int>(std::to_string(std::max(max_count, max_a)).size()) + 1);
    const int label = static_cast<int>(std::to_string(max_b).size());

    auto pad = [](const std::string& s, int w) {
        return std::string(static_cast<std::size_t>(std::max(0, w - static_cast<int>(s.size()))), ' ') + s;
    };

    std::ostringstream os;
    for (int b = max_b; b >= 0; --b) {
        std::string line = pad(std::to_string(b), label) + " |";
        for (int a = 0; a <= max_a; ++a) {
            int n = m.count({a, b});
            line += pad(n ? std::to_string(n) : "", cell);
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os << line << '\n';
    }
    os << std::string(static_cast<std::size_t>(label) + 1, ' ') << '+'
       << std::string(static_cast<std::size_t>(cell * (max_a + 1)), '-') << '\n';
    std::string axis = std::string(static_cast<std::size_t>(label) + 2, ' ');
    for (int a = 0; a <= max_a; ++a)
        axis += pad(std::to_string(a), cell);
    os << axis << '\n';
    return os.str();
}

} // namespace eqg
