#pragma once

// Schubert cells of Gr_k(R^p) and the E1 pages they produce once R^{p,q} is
// written as an ordered sum of trivial and sign lines.

#include "eqgrass/modalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace eqg {

enum class Sign : unsigned char { trivial, sign };

/// An ordering of q sign lines and p - q trivial lines, written like "--+++-".
class SignWord {
public:
    SignWord() = default;
    explicit SignWord(std::vector<Sign> letters) : letters_(std::move(letters)) {}

    static SignWord parse(std::string_view text)
    {
        std::vector<Sign> letters;
        for (char c : text) {
            if (c == '+')
                letters.push_back(Sign::trivial);
            else if (c == '-')
                letters.push_back(Sign::sign);
            else
                throw std::invalid_argument(std::string("invalid sign-word letter '") + c +
                                            "' in '" + std::string(text) + "'");
        }
        return SignWord(std::move(letters));
    }

    /// All C(p,q) words, in lexicographic order of the sign positions.
    static std::vector<SignWord> all(int p, int q)
    {
        if (p < 0 || q < 0 || q > p)
            throw std::invalid_argument("sign words need 0 <= q <= p");
        std::vector<SignWord> out;
        std::vector<bool> mask(static_cast<std::size_t>(p), false);
        std::fill(mask.begin(), mask.begin() + q, true);
        do {
            std::vector<Sign> letters;
            for (bool m : mask)
                letters.push_back(m ? Sign::sign : Sign::trivial);
            out.emplace_back(std::move(letters));
        } while (std::prev_permutation(mask.begin(), mask.end()));
        return out;
    }

    int p() const { return static_cast<int>(letters_.size()); }
    int q() const { return static_cast<int>(std::count(letters_.begin(), letters_.end(), Sign::sign)); }

    /// Letter at 1-based column j.
    Sign at(int j) const { return letters_.at(static_cast<std::size_t>(j - 1)); }

    SignWord prefix(int m) const
    {
        if (m < 0 || m > p())
            throw std::invalid_argument("prefix length out of range");
        return SignWord({letters_.begin(), letters_.begin() + m});
    }

    std::string to_string() const
    {
        std::string s;
        for (Sign l : letters_)
            s += l == Sign::sign ? '-' : '+';
        return s;
    }

    friend bool operator==(const SignWord&, const SignWord&) = default;

private:
    std::vector<Sign> letters_;
};

/// Pivot columns c_1 < ... < c_k (1-based).  The pivot of a row is its last nonzero entry.
struct SchubertCell {
    std::vector<int> pivots;

    int dimension() const
    {
        int d = 0;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            d += pivots[i] - static_cast<int>(i) - 1;
        return d;
    }
    int max_pivot() const { return pivots.empty() ? 0 : pivots.back(); }

    friend bool operator==(const SchubertCell&, const SchubertCell&) = default;
};

inline std::int64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = checked::mul(r, n - k + i) / i;
    return r;
}

inline std::vector<SchubertCell> enumerate_cells(int k, int p)
{
    if (k < 0 || p < 0 || k > p)
        throw std::invalid_argument("enumerate_cells needs 0 <= k <= p");
    std::vector<SchubertCell> out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        c[static_cast<std::size_t>(i)] = i + 1;
    for (;;) {
        out.push_back({c});
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == p - k + i + 1)
            --i;
        if (i < 0)
            break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// A free entry in row i, column j carries a sign action iff the letters at j and
/// at the row's pivot differ.
inline Bidegree cell_bidegree(const SchubertCell& cell, const SignWord& w)
{
    if (cell.max_pivot() > w.p())
        throw std::invalid_argument("cell pivot exceeds sign-word length");
    std::vector<bool> is_pivot(static_cast<std::size_t>(w.p()) + 1, false);
    for (int c : cell.pivots)
        is_pivot[static_cast<std::size_t>(c)] = true;
    Bidegree d;
    for (int c : cell.pivots) {
        for (int j = 1; j < c; ++j) {
            if (is_pivot[static_cast<std::size_t>(j)])
                continue;
            ++d.a;
            if (w.at(j) != w.at(c))
                ++d.b;
        }
    }
    return d;
}

inline FreeModule e1_page(int k, const SignWord& w)
{
    std::vector<Bidegree> g;
    for (const auto& cell : enumerate_cells(k, w.p()))
        g.push_back(cell_bidegree(cell, w));
    return FreeModule(std::move(g));
}

/// Orders pages by tension, ties by canonical module order.
inline bool tension_less(const FreeModule& l, const FreeModule& r)
{
    auto tl = tension(l), tr = tension(r);
    if (tl != tr)
        return tl < tr;
    return l < r;
}

/// Distinct E1 pages over all C(p,q) sign words, lowest tension first.
inline std::vector<FreeModule> unique_e1_pages(int k, int p, int q)
{
    if (k < 0 || k > p)
        throw std::invalid_argument("unique_e1_pages needs 0 <= k <= p");
    std::vector<FreeModule> pages;
    for (const auto& w : SignWord::all(p, q))
        pages.push_back(e1_page(k, w));
    std::sort(pages.begin(), pages.end());
    pages.erase(std::unique(pages.begin(), pages.end()), pages.end());
    std::sort(pages.begin(), pages.end(), tension_less);
    return pages;
}

/// Summands of e1_page(k, w) from cells not contained in Gr_k of the first m coordinates.
inline FreeModule e1_quotient_page(int k, const SignWord& w, int m)
{
    if (m < 0 || m > w.p())
        throw std::invalid_argument("quotient prefix length out of range");
    std::vector<Bidegree> g;
    for (const auto& cell : enumerate_cells(k, w.p()))
        if (cell.max_pivot() > m)
            g.push_back(cell_bidegree(cell, w));
    return FreeModule(std::move(g));
}

/// T(Gr_k R^{p,q}) = (p - q) q C(p-2, k-1).
inline std::int64_t total_weight_formula(int k, int p, int q)
{
    if (k < 1 || k > p - 1 || q < 0 || q > p)
        throw std::invalid_argument("total_weight_formula needs 1 <= k <= p-1 and 0 <= q <= p");
    return checked::mul(checked::mul(p - q, q), binomial(p - 2, k - 1));
}

struct GrassmannParams {
    int k = 0;
    int p = 0;
    int q = 0;
    friend bool operator==(const GrassmannParams&, const GrassmannParams&) = default;
};

/// Uses Gr_k = Gr_{p-k} and R^{p,q} = R^{p,p-q} to bring k and q to at most p/2.
inline GrassmannParams normalize(GrassmannParams g)
{
    g.k = std::min(g.k, g.p - g.k);
    g.q = std::min(g.q, g.p - g.q);
    return g;
}

} // namespace eqg
