#pragma once

// Exact sparse arithmetic in Z[x,y] and Z[x, 1/x].
//
// BiPoly holds the bigraded Poincare statistic of a free M2-module, and the
// Kronholm polynomials K(n,s) = (1 - x^n y^n)(y^s - 1).  Every Kronholm
// polynomial is a multiple of K(1,1) = (y - 1)(1 - xy), so membership in the
// Kronholm ideal reduces to two exact one-variable divisions.

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eqg {

using coef_t = std::int64_t;

class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& msg, std::string token)
        : std::invalid_argument(msg), token_(std::move(token)) {}
    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

namespace checked {

inline coef_t add(coef_t a, coef_t b)
{
    coef_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer overflow in addition");
    return r;
}

inline coef_t sub(coef_t a, coef_t b)
{
    coef_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("integer overflow in subtraction");
    return r;
}

inline coef_t mul(coef_t a, coef_t b)
{
    coef_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer overflow in multiplication");
    return r;
}

inline coef_t pow(coef_t base, int e)
{
    coef_t r = 1;
    for (int i = 0; i < e; ++i)
        r = mul(r, base);
    return r;
}

} // namespace checked

/// Exponent pair of a monomial x^i y^j.
struct Monomial {
    int i = 0;
    int j = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    int degree() const { return i + j; }
};

/// Graded lexicographic order, x before y, largest first.
struct GradedLexGreater {
    bool operator()(const Monomial& l, const Monomial& r) const
    {
        if (l.degree() != r.degree())
            return l.degree() > r.degree();
        return l.i > r.i;
    }
};

class UniPoly;

class BiPoly {
public:
    using term_map = std::map<Monomial, coef_t, GradedLexGreater>;

    BiPoly() = default;
    BiPoly(coef_t c)
    {
        if (c != 0)
            terms_.emplace(Monomial{0, 0}, c);
    }

    static BiPoly monomial(int i, int j, coef_t c = 1)
    {
        if (i < 0 || j < 0)
            throw std::invalid_argument("negative exponent in BiPoly");
        BiPoly r;
        if (c != 0)
            r.terms_.emplace(Monomial{i, j}, c);
        return r;
    }
    static BiPoly x() { return monomial(1, 0); }
    static BiPoly y() { return monomial(0, 1); }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    coef_t coeff(int i, int j) const
    {
        auto it = terms_.find(Monomial{i, j});
        return it == terms_.end() ? 0 : it->second;
    }

    /// Adds c x^i y^j in place, keeping the no-zero-coefficient invariant.
    void add_term(int i, int j, coef_t c)
    {
        if (c == 0)
            return;
        if (i < 0 || j < 0)
            throw std::invalid_argument("negative exponent in BiPoly");
        auto [it, inserted] = terms_.try_emplace(Monomial{i, j}, c);
        if (!inserted) {
            it->second = checked::add(it->second, c);
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    BiPoly& operator+=(const BiPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m.i, m.j, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o)
    {
        for (const auto& [m, c] : o.terms_)
            add_term(m.i, m.j, checked::sub(0, c));
        return *this;
    }

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator-(const BiPoly& a) { return BiPoly{} - a; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b)
    {
        BiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma.i + mb.i, ma.j + mb.j, checked::mul(ca, cb));
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b)
    {
        return a.terms_ == b.terms_;
    }

    /// Exact evaluation; throws overflow_error instead of wrapping.
    coef_t eval(coef_t x0, coef_t y0) const
    {
        coef_t acc = 0;
        for (const auto& [m, c] : terms_) {
            coef_t t = checked::mul(c, checked::pow(x0, m.i));
            acc = checked::add(acc, checked::mul(t, checked::pow(y0, m.j)));
        }
        return acc;
    }

    std::string to_string() const;
    static BiPoly parse(std::string_view text);

private:
    term_map terms_;
};

/// Laurent polynomial in one variable; the images of U and F land here.
class UniPoly {
public:
    using term_map = std::map<int, coef_t, std::greater<>>;

    UniPoly() = default;
    UniPoly(coef_t c)
    {
        if (c != 0)
            terms_.emplace(0, c);
    }
    static UniPoly monomial(int e, coef_t c = 1)
    {
        UniPoly r;
        r.add_term(e, c);
        return r;
    }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    coef_t coeff(int e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }
    int min_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    void add_term(int e, coef_t c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = checked::add(it->second, c);
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b)
    {
        for (const auto& [e, c] : b.terms_)
            a.add_term(e, c);
        return a;
    }
    friend UniPoly operator-(UniPoly a, const UniPoly& b)
    {
        for (const auto& [e, c] : b.terms_)
            a.add_term(e, checked::sub(0, c));
        return a;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        UniPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, checked::mul(ca, cb));
        return r;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            coef_t mag = c < 0 ? -c : c;
            if (first)
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            first = false;
            if (mag != 1 || e == 0)
                out += std::to_string(mag);
            if (e != 0) {
                out += "x";
                if (e != 1)
                    out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    term_map terms_;
};

inline std::string BiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        coef_t mag = c < 0 ? -c : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (mag != 1 || (m.i == 0 && m.j == 0))
            out += std::to_string(mag);
        if (m.i > 0) {
            out += "x";
            if (m.i != 1)
                out += "^" + std::to_string(m.i);
        }
        if (m.j > 0) {
            out += "y";
            if (m.j != 1)
                out += "^" + std::to_string(m.j);
        }
    }
    return out;
}

namespace detail {

class poly_lexer {
public:
    explicit poly_lexer(std::string_view s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void advance() { ++pos_; }

    bool peek_digit()
    {
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
    }

    coef_t number()
    {
        skip_ws();
        std::size_t start = pos_;
        coef_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = checked::add(checked::mul(v, 10), s_[pos_] - '0');
            ++pos_;
        }
        if (start == pos_)
            fail("expected a number");
        return v;
    }

    [[noreturn]] void fail(const std::string& what)
    {
        skip_ws();
        std::size_t end = pos_;
        while (end < s_.size() && !std::isspace(static_cast<unsigned char>(s_[end])))
            ++end;
        std::string tok = pos_ < s_.size() ? std::string(s_.substr(pos_, end - pos_)) : "<end>";
        throw parse_error("cannot parse polynomial: " + what + " at '" + tok + "'", tok);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Grammar: terms separated by '+' or '-'; a term is [coef]["x"["^"n]]["y"["^"n]],
/// with optional whitespace and '*' between factors.
inline BiPoly BiPoly::parse(std::string_view text)
{
    detail::poly_lexer lx(text);
    BiPoly result;
    if (lx.done())
        lx.fail("empty polynomial");

    bool first = true;
    while (!lx.done()) {
        coef_t sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            lx.advance();
        } else if (!first) {
            lx.fail("expected '+' or '-'");
        }
        first = false;

        coef_t coef = 1;
        bool have_factor = false;
        if (lx.peek_digit()) {
            coef = lx.number();
            have_factor = true;
        }
        int ex = 0, ey = 0;
        bool seen_x = false, seen_y = false;
        for (;;) {
            char v = lx.peek();
            if (v == '*' && have_factor) {
                lx.advance();
                v = lx.peek();
                if (v != 'x' && v != 'y')
                    lx.fail("expected variable after '*'");
            }
            if (v != 'x' && v != 'y')
                break;
            bool is_x = v == 'x';
            if ((is_x && seen_x) || (!is_x && seen_y))
                lx.fail("repeated variable");
            lx.advance();
            int e = 1;
            if (lx.peek() == '^') {
                lx.advance();
                coef_t n = lx.number();
                if (n > 100000)
                    lx.fail("exponent too large");
                e = static_cast<int>(n);
            }
            (is_x ? ex : ey) = e;
            (is_x ? seen_x : seen_y) = true;
            have_factor = true;
        }
        if (!have_factor)
            lx.fail("expected a term");
        result.add_term(ex, ey, checked::mul(sign, coef));
    }
    return result;
}

// Kronholm polynomial K(n,s) = (1 - x^n y^n)(y^s - 1).
inline BiPoly kronholm_poly(int n, int s)
{
    if (n < 1 || s < 1)
        throw std::invalid_argument("kronholm_poly requires n >= 1 and s >= 1");
    BiPoly a = BiPoly(1) - BiPoly::monomial(n, n);
    BiPoly b = BiPoly::monomial(0, s) - BiPoly(1);
    return a * b;
}

inline const BiPoly& k11()
{
    static const BiPoly k = kronholm_poly(1, 1);
    return k;
}

/// U: y -> 1.
inline UniPoly substitute_u(const BiPoly& f)
{
    UniPoly r;
    for (const auto& [m, c] : f.terms())
        r.add_term(m.i, c);
    return r;
}

/// F: y -> 1/x.
inline UniPoly substitute_f(const BiPoly& f)
{
    UniPoly r;
    for (const auto& [m, c] : f.terms())
        r.add_term(m.i - m.j, c);
    return r;
}

/// Exact quotient f / K(1,1), or nullopt when f is not in (K(1,1)).
///
/// First divides by (y - 1) one x-degree at a time (exact iff U(f) = 0), then
/// divides the cofactor by (1 - xy) along each diagonal x^(a+t) y^(b+t)
/// (exact iff F(f) = 0).  The quotient is checked by re-multiplication.
inline std::optional<BiPoly> divide_by_k11(const BiPoly& f)
{
    if (f.is_zero())
        return BiPoly{};

    // f = (y - 1) h.  For fixed i, h_j = -(c_0 + ... + c_j).
    std::map<int, std::map<int, coef_t>> rows;
    for (const auto& [m, c] : f.terms())
        rows[m.i][m.j] = c;
    std::map<std::pair<int, int>, std::map<int, coef_t>> diagonals;
    for (const auto& [i, row] : rows) {
        coef_t acc = 0;
        int top = row.rbegin()->first;
        for (int j = 0; j <= top; ++j) {
            if (auto it = row.find(j); it != row.end())
                acc = checked::add(acc, it->second);
            if (acc != 0) {
                int t = std::min(i, j);
                diagonals[{i - t, j - t}][t] = checked::sub(0, acc);
            }
        }
        if (acc != 0)
            return std::nullopt;
    }

    // h = (1 - xy) q.  Along one diagonal, q_t = h_0 + ... + h_t.
    BiPoly q;
    for (const auto& [base, line] : diagonals) {
        coef_t acc = 0;
        int top = line.rbegin()->first;
        for (int t = 0; t <= top; ++t) {
            if (auto it = line.find(t); it != line.end())
                acc = checked::add(acc, it->second);
            if (acc != 0)
                q.add_term(base.first + t, base.second + t, acc);
        }
        if (acc != 0)
            return std::nullopt;
    }

    if (!(q * k11() == f))
        throw std::logic_error("divide_by_k11: quotient failed re-multiplication");
    return q;
}

/// True iff no coefficient is negative; the zero polynomial counts as nonnegative.
inline bool is_nonnegative(const BiPoly& f)
{
    for (const auto& [m, c] : f.terms())
        if (c < 0)
            return false;
    return true;
}

/// Bidegree cones of the coefficient ring M2 = H^{*,*}(pt).
struct PointCone {
    static bool in_positive_cone(int i, int j) { return 0 <= i && i <= j; }
    static bool in_negative_cone(int i, int j) { return i <= 0 && j <= i - 2; }
    static bool nonzero(int i, int j) { return in_positive_cone(i, j) || in_negative_cone(i, j); }
};

} // namespace eqg
