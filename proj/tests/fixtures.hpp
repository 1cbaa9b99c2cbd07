#pragma once

// Modules transcribed from published rank tables, keyed by (k, p, q).

#include "eqgrass/modalg.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace eqg::fixtures {

inline const std::map<std::tuple<int, int, int>, FreeModule>& published_answers()
{
    static const std::map<std::tuple<int, int, int>, FreeModule> table = {
        {{2, 4, 2}, FreeModule::from_counts({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 1}, {{4, 2}, 1}})},
        {{2, 6, 3}, FreeModule::from_counts({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 2}, {{4, 2}, 2}, {{4, 3}, 1}, {{5, 3}, 2}, {{6, 3}, 1}, {{6, 4}, 1}, {{7, 4}, 1}, {{8, 4}, 1}})},
        {{2, 7, 3}, FreeModule::from_counts({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 2}, {{4, 2}, 2}, {{4, 3}, 1}, {{5, 3}, 3}, {{6, 3}, 2}, {{6, 4}, 1}, {{7, 4}, 2}, {{8, 4}, 2}, {{9, 5}, 1}, {{10, 5}, 1}})},
        {{2, 8, 3}, FreeModule::from_counts({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 2}, {{4, 2}, 2}, {{4, 3}, 1}, {{5, 3}, 3}, {{6, 3}, 3}, {{6, 4}, 1}, {{7, 3}, 1}, {{7, 4}, 2}, {{8, 4}, 3}, {{9, 4}, 1}, {{9, 5}, 1}, {{10, 5}, 2}, {{11, 5}, 1}, {{12, 6}, 1}})},
        {{2, 8, 4}, FreeModule::from_counts({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 2}, {{4, 2}, 2}, {{4, 3}, 1}, {{5, 3}, 3}, {{6, 3}, 2}, {{6, 4}, 2}, {{7, 4}, 3}, {{8, 4}, 2}, {{8, 5}, 1}, {{9, 5}, 2}, {{10, 5}, 1}, {{10, 6}, 1}, {{11, 6}, 1}, {{12, 6}, 1}})},
        {{2, 9, 4}, FreeModule::from_counts({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 2}, {{4, 2}, 2}, {{4, 3}, 1}, {{5, 3}, 3}, {{6, 3}, 2}, {{6, 4}, 2}, {{7, 4}, 4}, {{8, 4}, 3}, {{8, 5}, 1}, {{9, 5}, 3}, {{10, 5}, 2}, {{10, 6}, 1}, {{11, 6}, 2}, {{12, 6}, 2}, {{13, 7}, 1}, {{14, 7}, 1}})},
        {{2, 10, 5}, FreeModule::from_counts({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 2}, {{4, 2}, 2}, {{4, 3}, 1}, {{5, 3}, 3}, {{6, 3}, 2}, {{6, 4}, 2}, {{7, 4}, 4}, {{8, 4}, 3}, {{8, 5}, 2}, {{9, 5}, 4}, {{10, 5}, 2}, {{10, 6}, 2}, {{11, 6}, 3}, {{12, 6}, 2}, {{12, 7}, 1}, {{13, 7}, 2}, {{14, 7}, 1}, {{14, 8}, 1}, {{15, 8}, 1}, {{16, 8}, 1}})},
        {{2, 11, 5}, FreeModule::from_counts({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 2}, {{4, 2}, 2}, {{4, 3}, 1}, {{5, 3}, 3}, {{6, 3}, 2}, {{6, 4}, 2}, {{7, 4}, 4}, {{8, 4}, 3}, {{8, 5}, 2}, {{9, 5}, 5}, {{10, 5}, 3}, {{10, 6}, 2}, {{11, 6}, 4}, {{12, 6}, 3}, {{12, 7}, 1}, {{13, 7}, 3}, {{14, 7}, 2}, {{14, 8}, 1}, {{15, 8}, 2}, {{16, 8}, 2}, {{17, 9}, 1}, {{18, 9}, 1}})},
        {{2, 12, 6}, FreeModule::from_counts({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 2}, {{4, 2}, 2}, {{4, 3}, 1}, {{5, 3}, 3}, {{6, 3}, 2}, {{6, 4}, 2}, {{7, 4}, 4}, {{8, 4}, 3}, {{8, 5}, 2}, {{9, 5}, 5}, {{10, 5}, 3}, {{10, 6}, 3}, {{11, 6}, 5}, {{12, 6}, 3}, {{12, 7}, 2}, {{13, 7}, 4}, {{14, 7}, 2}, {{14, 8}, 2}, {{15, 8}, 3}, {{16, 8}, 2}, {{16, 9}, 1}, {{17, 9}, 2}, {{18, 9}, 1}, {{18, 10}, 1}, {{19, 10}, 1}, {{20, 10}, 1}})},
        {{2, 13, 6}, FreeModule::from_counts({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 2}, {{4, 2}, 2}, {{4, 3}, 1}, {{5, 3}, 3}, {{6, 3}, 2}, {{6, 4}, 2}, {{7, 4}, 4}, {{8, 4}, 3}, {{8, 5}, 2}, {{9, 5}, 5}, {{10, 5}, 3}, {{10, 6}, 3}, {{11, 6}, 6}, {{12, 6}, 4}, {{12, 7}, 2}, {{13, 7}, 5}, {{14, 7}, 3}, {{14, 8}, 2}, {{15, 8}, 4}, {{16, 8}, 3}, {{16, 9}, 1}, {{17, 9}, 3}, {{18, 9}, 2}, {{18, 10}, 1}, {{19, 10}, 2}, {{20, 10}, 2}, {{21, 11}, 1}, {{22, 11}, 1}})},
        {{3, 6, 2}, FreeModule::from_counts({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 2}, 3}, {{4, 2}, 3}, {{5, 2}, 1}, {{5, 3}, 2}, {{6, 3}, 3}, {{7, 3}, 1}, {{7, 4}, 1}, {{8, 4}, 1}, {{9, 4}, 1}})},
    };
    return table;
}
/// The six possible answers left for Gr_3(R^{6,3}), in the published order (i)..(vi).
inline const std::vector<const char*>& gr363_candidates()
{
    static const std::vector<const char*> polys = {
        "x^9y^5 + x^8y^4 + 2x^7y^4 + x^6y^4 + x^5y^5 + 2x^6y^3 + 2x^5y^3 + 3x^4y^2 + 3x^3y^2 + x^2y^2 + x^2y + xy + 1",
        "x^9y^5 + x^8y^4 + 2x^7y^4 + x^6y^4 + 2x^6y^3 + 3x^5y^3 + x^4y^4 + 2x^4y^2 + 3x^3y^2 + x^2y^2 + x^2y + xy + 1",
        "x^9y^5 + x^8y^4 + 2x^7y^4 + x^6y^4 + 2x^6y^3 + x^5y^4 + 2x^5y^3 + 3x^4y^2 + x^3y^3 + 2x^3y^2 + x^2y^2 + x^2y + xy + 1",
        "x^9y^5 + x^8y^4 + 2x^7y^4 + x^6y^4 + 2x^6y^3 + 3x^5y^3 + x^4y^3 + 2x^4y^2 + x^3y^3 + 2x^3y^2 + x^2y^2 + x^2y + xy + 1",
        "x^9y^5 + x^8y^4 + 2x^7y^4 + x^6y^4 + 2x^6y^3 + x^5y^4 + 2x^5y^3 + 3x^4y^2 + 3x^3y^2 + 2x^2y^2 + xy + 1",
        "x^9y^5 + x^8y^4 + 2x^7y^4 + x^6y^4 + 2x^6y^3 + 3x^5y^3 + x^4y^3 + 2x^4y^2 + 3x^3y^2 + 2x^2y^2 + xy + 1",
    };
    return polys;
}

/// Lowest-tension E1 page of Gr_3(R^{6,3}).
inline constexpr const char* gr363_lowest_page =
    "x^9y^5 + x^8y^4 + 2x^7y^4 + x^6y^4 + x^5y^5 + 2x^6y^3 + 2x^5y^3 + x^4y^4 + 2x^4y^2 + 2x^3y^2 + x^3y + 2x^2y + xy + 1";

/// Quoted Poincare polynomial of H(Gr_3 R^{5,2}) + E1(Q).
inline constexpr const char* gr363_subspace_base =
    "x^9y^5 + x^8y^4 + x^6y^6 + 2x^7y^4 + 2x^6y^3 + 3x^5y^3 + 3x^4y^2 + 3x^3y^2 + x^2y^2 + x^2y + xy + 1";

} // namespace eqg::fixtures
