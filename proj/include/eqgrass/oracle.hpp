#pragma once

// Classical cross-checks, computed without the bigraded machinery wherever possible.

#include "eqgrass/search.hpp"

#include <algorithm>
#include <iterator>
#include <string>
#include <vector>

namespace eqg {

/// Mod-2 Poincare polynomial of Gr_k(R^p): one x^dim per Schubert cell.
inline UniPoly gaussian_binomial(int p, int k)
{
    UniPoly r;
    for (const auto& cell : enumerate_cells(k, p))
        r.add_term(cell.dimension(), 1);
    return r;
}

/// Poincare polynomial of the fixed set: k-planes split into a j-plane of the
/// trivial part and a (k-j)-plane of the sign part.
inline UniPoly fixed_set_poincare(int k, int p, int q)
{
    if (q < 0 || q > p || k < 0 || k > p)
        throw std::invalid_argument("fixed_set_poincare needs 0 <= q <= p and 0 <= k <= p");
    UniPoly r;
    for (int j = 0; j <= k; ++j) {
        if (j > p - q || k - j > q)
            continue;
        r = r + gaussian_binomial(p - q, j) * gaussian_binomial(q, k - j);
    }
    return r;
}

/// Intersection of the candidate sets of every distinct E1 page.
inline std::vector<FreeModule> naive_solve(int k, int p, int q, const SearchOptions& opt = {})
{
    std::vector<FreeModule> common;
    bool first = true;
    for (const auto& page : unique_e1_pages(k, p, q)) {
        auto c = candidate_outcomes(page, opt);
        if (first) {
            common = std::move(c);
            first = false;
            continue;
        }
        std::vector<FreeModule> next;
        std::set_intersection(common.begin(), common.end(), c.begin(), c.end(), std::back_inserter(next));
        common.swap(next);
    }
    return common;
}

struct PageDiagnostics {
    bool underlying_ok = false; // U(P(M)) is the Gaussian binomial
    bool fixed_set_ok = false;  // F(P(M)) is the fixed-set polynomial
    bool weight_ok = false;     // total weight matches the closed formula
    std::vector<std::string> messages;

    bool all_passed() const { return underlying_ok && fixed_set_ok && weight_ok; }
};

inline PageDiagnostics validate_page(const FreeModule& m, int k, int p, int q)
{
    PageDiagnostics d;
    const BiPoly poly = poincare(m);

    const UniPoly u = substitute_u(poly), u_want = gaussian_binomial(p, k);
    d.underlying_ok = u == u_want;
    d.messages.push_back(std::string("U-check ") + (d.underlying_ok ? "passed" : "FAILED") + ": " +
                         u.to_string() + (d.underlying_ok ? "" : " != " + u_want.to_string()));

    const UniPoly f = substitute_f(poly), f_want = fixed_set_poincare(k, p, q);
    d.fixed_set_ok = f == f_want;
    d.messages.push_back(std::string("F-check ") + (d.fixed_set_ok ? "passed" : "FAILED") + ": " +
                         f.to_string() + (d.fixed_set_ok ? "" : " != " + f_want.to_string()));

    if (k >= 1 && k <= p - 1) {
        const coef_t w = total_weight(m), w_want = total_weight_formula(k, p, q);
        d.weight_ok = w == w_want;
        d.messages.push_back(std::string("weight-check ") + (d.weight_ok ? "passed" : "FAILED") + ": " +
                             std::to_string(w) + (d.weight_ok ? "" : " != " + std::to_string(w_want)));
    } else {
        d.weight_ok = total_weight(m) == 0;
        d.messages.push_back(std::string("weight-check ") + (d.weight_ok ? "passed" : "FAILED") +
                             ": point Grassmannian has weight 0");
    }
    return d;
}

} // namespace eqg
