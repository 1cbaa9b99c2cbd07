// Walks through the pruned search for Gr_3(R^{6,3}) and prints each stage.

#include "eqgrass/eqgrass.hpp"

#include <iostream>

int main()
{
    using namespace eqg;

    const auto report = solve(3, 6, 3);

    std::cout << "distinct E1 pages: " << report.pages.size() << '\n';
    for (std::size_t i = 0; i < report.pages.size(); ++i)
        std::cout << "  tension " << report.tensions[i] << ": " << poincare(report.pages[i]).to_string() << '\n';

    std::cout << "candidates from the lowest-tension page: " << report.candidates.size() << '\n';
    for (const auto& step : report.log)
        std::cout << "  page with tension " << report.tensions[step.page] << " removes " << step.removed.size()
                  << '\n';

    std::cout << "survivors: " << report.survivors.size() << '\n';
    for (const auto& m : report.survivor_modules())
        std::cout << "  " << poincare(m).to_string() << '\n';

    std::cout << "\nlowest-tension E1 page:\n" << render_rank_table(report.pages[0]);
}
