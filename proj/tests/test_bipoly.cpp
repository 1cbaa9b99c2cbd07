#include "eqgrass/bipoly.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

using namespace eqg;

namespace {

BiPoly P(const char* s) { return BiPoly::parse(s); }

BiPoly random_poly(std::mt19937_64& rng, int max_terms, int max_exp, int max_coef)
{
    std::uniform_int_distribution<int> nt(0, max_terms), ex(0, max_exp), co(-max_coef, max_coef);
    BiPoly f;
    for (int t = nt(rng); t > 0; --t)
        f.add_term(ex(rng), ex(rng), co(rng));
    return f;
}

BiPoly geometric(const BiPoly& step, int count)
{
    BiPoly sum, power(1);
    for (int i = 0; i < count; ++i) {
        sum += power;
        power = power * step;
    }
    return sum;
}

} // namespace

TEST(BiPoly, Arithmetic)
{
    EXPECT_EQ(BiPoly::x() + BiPoly::y(), P("x + y"));
    EXPECT_EQ((BiPoly(1) - P("xy")) * (P("y") - BiPoly(1)), P("y - 1 - xy^2 + xy"));
    const BiPoly f = P("3x^2y - 7y^4 + 2");
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ((f - f).size(), 0u);
}

TEST(BiPoly, CanonicalFormHasNoZeroCoefficients)
{
    BiPoly f = P("x + y - x");
    EXPECT_EQ(f, BiPoly::y());
    EXPECT_EQ(f.size(), 1u);
    EXPECT_EQ(f.coeff(1, 0), 0);
}

TEST(BiPoly, OverflowIsReported)
{
    const BiPoly big = BiPoly::monomial(1, 0, std::numeric_limits<coef_t>::max());
    EXPECT_THROW((void)(big + big), overflow_error);
    EXPECT_THROW((void)(big * BiPoly(2)), overflow_error);
    EXPECT_THROW((void)P("x^70").eval(2, 1), overflow_error);
}

TEST(BiPoly, Eval)
{
    EXPECT_EQ(k11().eval(1, 2), -1);
    EXPECT_EQ(P("x^9y^5 + x^8y^4 + 2x^7y^4 + x^6y^4 + x^5y^5 + 2x^6y^3 + 2x^5y^3 + x^4y^4 + 2x^4y^2 + "
                "2x^3y^2 + x^3y + 2x^2y + xy + 1")
                  .eval(1, 2),
              201);
    EXPECT_EQ(BiPoly{}.eval(7, 9), 0);
}

TEST(BiPoly, KronholmPolynomial)
{
    EXPECT_EQ(kronholm_poly(1, 1), P("y - 1 - xy^2 + xy"));
    EXPECT_EQ(kronholm_poly(3, 1), (BiPoly(1) - P("x^3y^3")) * (P("y") - BiPoly(1)));
    EXPECT_EQ(divide_by_k11(kronholm_poly(1, 3)), P("1 + y + y^2"));
    EXPECT_THROW(kronholm_poly(0, 1), std::invalid_argument);
    EXPECT_THROW(kronholm_poly(1, -2), std::invalid_argument);
}

TEST(BiPoly, KronholmFactorisationLemmas)
{
    for (int n = 1; n <= 8; ++n) {
        for (int s = 1; s <= 8; ++s) {
            const BiPoly diag = geometric(P("xy"), n), vert = geometric(P("y"), s);
            EXPECT_EQ(kronholm_poly(n, s), diag * kronholm_poly(1, s)) << n << "," << s;
            EXPECT_EQ(kronholm_poly(1, s), vert * k11()) << s;
            EXPECT_EQ(divide_by_k11(kronholm_poly(n, s)), diag * vert) << n << "," << s;
        }
    }
}

TEST(BiPoly, SubstituteU)
{
    EXPECT_EQ(substitute_u(P("1 + x + x^2y^2")), UniPoly(1) + UniPoly::monomial(1) + UniPoly::monomial(2));
    for (int n = 1; n <= 6; ++n)
        for (int s = 1; s <= 6; ++s)
            EXPECT_TRUE(substitute_u(kronholm_poly(n, s)).is_zero());
    EXPECT_TRUE(substitute_u(BiPoly{}).is_zero());
}

TEST(BiPoly, SubstituteF)
{
    EXPECT_EQ(substitute_f(P("1 + x + x^2y^2")), UniPoly(2) + UniPoly::monomial(1));
    for (int n = 1; n <= 6; ++n)
        for (int s = 1; s <= 6; ++s)
            EXPECT_TRUE(substitute_f(kronholm_poly(n, s)).is_zero());
    EXPECT_EQ(substitute_f(BiPoly(1)), UniPoly(1));
    EXPECT_EQ(substitute_f(P("y")).min_exponent(), -1);
}

TEST(BiPoly, DivideByK11)
{
    EXPECT_EQ(divide_by_k11(P("x") * kronholm_poly(3, 1)), P("x + x^2y + x^3y^2"));
    const BiPoly iv = P("x^9y^5 + x^8y^4 + 2x^7y^4 + x^6y^4 + 2x^6y^3 + 3x^5y^3 + x^4y^3 + 2x^4y^2 + x^3y^3 + "
                        "2x^3y^2 + x^2y^2 + x^2y + xy + 1");
    const BiPoly vi = P("x^9y^5 + x^8y^4 + 2x^7y^4 + x^6y^4 + 2x^6y^3 + 3x^5y^3 + x^4y^3 + 2x^4y^2 + 3x^3y^2 + "
                        "2x^2y^2 + xy + 1");
    EXPECT_EQ(divide_by_k11(vi - iv), P("x^2y"));
    EXPECT_EQ(divide_by_k11(P("y - 1")), std::nullopt);
    EXPECT_EQ(divide_by_k11(BiPoly{}), BiPoly{});
}

// Membership iff both U and F images vanish; quotient re-multiplies exactly.
TEST(BiPoly, DivisionPropertyRandomized)
{
    std::mt19937_64 rng(20261019);
    int members = 0, nonmembers = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        BiPoly f;
        const bool make_member = trial % 2 == 0;
        if (make_member)
            f = random_poly(rng, 6, 6, 9) * k11();
        else
            f = random_poly(rng, 8, 7, 9);
        const auto q = divide_by_k11(f);
        const bool vanish = substitute_u(f).is_zero() && substitute_f(f).is_zero();
        EXPECT_EQ(q.has_value(), vanish) << f.to_string();
        if (make_member) {
            EXPECT_TRUE(q.has_value());
        }
        if (q) {
            EXPECT_EQ(*q * k11(), f);
            ++members;
        } else {
            ++nonmembers;
        }
    }
    EXPECT_GT(members, 400);
    EXPECT_GT(nonmembers, 400);
}

TEST(BiPoly, RingAxiomsRandomized)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        BiPoly a = random_poly(rng, 5, 4, 20), b = random_poly(rng, 5, 4, 20), c = random_poly(rng, 5, 4, 20);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(BiPoly::parse(a.to_string()), a);
    }
}

TEST(BiPoly, IsNonnegative)
{
    EXPECT_TRUE(is_nonnegative(P("x^2y + x^3y + x^3y^2")));
    EXPECT_FALSE(is_nonnegative(P("x - x^2y")));
    EXPECT_TRUE(is_nonnegative(BiPoly{}));
}

TEST(BiPoly, PrintsGradedLex)
{
    EXPECT_EQ(P("1 + xy + 2x^2y + x^3y + x^4y^4").to_string(), "x^4y^4 + x^3y + 2x^2y + xy + 1");
    EXPECT_EQ(P("-x + y^2").to_string(), "y^2 - x");
    EXPECT_EQ(BiPoly{}.to_string(), "0");
    EXPECT_EQ(P("-1").to_string(), "-1");
}

TEST(BiPoly, ParserAcceptsStarsAndWhitespace)
{
    EXPECT_EQ(P(" 2 * x^2 * y  -  3y^2 +x"), P("2x^2y - 3y^2 + x"));
    EXPECT_EQ(P("- x"), -BiPoly::x());
    EXPECT_EQ(P("0"), BiPoly{});
}

TEST(BiPoly, ParserRejectsGarbageNamingTheToken)
{
    try {
        (void)P("1 + z^2");
        FAIL() << "expected parse_error";
    } catch (const parse_error& e) {
        EXPECT_EQ(e.token(), "z^2");
    }
    EXPECT_THROW((void)P(""), parse_error);
    EXPECT_THROW((void)P("1 +"), parse_error);
    EXPECT_THROW((void)P("x^"), parse_error);
    EXPECT_THROW((void)P("xx"), parse_error);
    EXPECT_THROW((void)P("2 3"), parse_error);
}

TEST(PointCone, Membership)
{
    EXPECT_TRUE(PointCone::in_positive_cone(0, 0)); // 1
    EXPECT_TRUE(PointCone::in_positive_cone(1, 1)); // rho
    EXPECT_TRUE(PointCone::in_positive_cone(0, 1)); // tau
    EXPECT_TRUE(PointCone::in_negative_cone(0, -2)); // theta
    EXPECT_TRUE(PointCone::in_negative_cone(-1, -3));
    EXPECT_TRUE(PointCone::in_negative_cone(0, -3));
    EXPECT_FALSE(PointCone::nonzero(1, 0));
    EXPECT_FALSE(PointCone::nonzero(0, -1));
    EXPECT_FALSE(PointCone::nonzero(-1, -2));
    for (int i = -6; i <= 6; ++i)
        for (int j = -6; j <= 6; ++j)
            EXPECT_FALSE(PointCone::in_positive_cone(i, j) && PointCone::in_negative_cone(i, j));
}
