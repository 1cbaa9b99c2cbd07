#pragma once

// JSON encodings: a module is {"generators": [[a, b, count], ...]} sorted by (a, b).

#include "eqgrass/search.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace eqg {

using json = nlohmann::json;

inline json to_json(const FreeModule& m)
{
    json gens = json::array();
    for (const auto& [d, n] : m.counts())
        gens.push_back({d.a, d.b, n});
    return json{{"generators", gens}};
}

inline FreeModule module_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
        throw std::invalid_argument("module JSON needs a \"generators\" array");
    std::vector<std::pair<Bidegree, int>> counts;
    for (const auto& g : j["generators"]) {
        if (!g.is_array() || g.size() != 3 || !g[0].is_number_integer() || !g[1].is_number_integer() ||
            !g[2].is_number_integer())
            throw std::invalid_argument("generator entries must be [a, b, count]: " + g.dump());
        counts.emplace_back(Bidegree{g[0].get<int>(), g[1].get<int>()}, g[2].get<int>());
    }
    return FreeModule::from_counts(counts);
}

inline json to_json(const SolveReport& r)
{
    json pages = json::array();
    for (std::size_t i = 0; i < r.pages.size(); ++i) {
        json pg = to_json(r.pages[i]);
        pg["tension"] = r.tensions[i];
        pg["poly"] = poincare(r.pages[i]).to_string();
        pages.push_back(pg);
    }
    json cands = json::array();
    for (const auto& c : r.candidates)
        cands.push_back(to_json(c));
    json log = json::array();
    for (const auto& step : r.log)
        log.push_back({{"page", step.page}, {"removed", step.removed}});
    return json{
        {"parameters",
         {{"k", r.params.k}, {"p", r.params.p}, {"q", r.params.q}, {"strategy", r.strategy.to_string()}}},
        {"pages", pages},
        {"chosen", r.chosen},
        {"reduced", r.reduced},
        {"candidates", cands},
        {"log", log},
        {"survivors", r.survivors},
        {"complete", r.complete},
        {"abort_reason", r.abort_reason},
    };
}

inline SolveReport report_from_json(const json& j)
{
    SolveReport r;
    const auto& par = j.at("parameters");
    r.params = {par.at("k").get<int>(), par.at("p").get<int>(), par.at("q").get<int>()};
    r.strategy = Strategy::parse(par.at("strategy").get<std::string>());
    for (const auto& pg : j.at("pages")) {
        r.pages.push_back(module_from_json(pg));
        r.tensions.push_back(pg.at("tension").get<coef_t>());
    }
    r.chosen = j.at("chosen").get<std::size_t>();
    r.reduced = j.at("reduced").get<std::vector<std::size_t>>();
    for (const auto& c : j.at("candidates"))
        r.candidates.push_back(module_from_json(c));
    for (const auto& step : j.at("log"))
        r.log.push_back({step.at("page").get<std::size_t>(), step.at("removed").get<std::vector<std::size_t>>()});
    r.survivors = j.at("survivors").get<std::vector<std::size_t>>();
    r.complete = j.at("complete").get<bool>();
    r.abort_reason = j.at("abort_reason").get<std::string>();

    for (auto i : r.survivors)
        if (i >= r.candidates.size())
            throw std::invalid_argument("survivor index out of range");
    for (const auto& step : r.log)
        if (step.page >= r.pages.size())
            throw std::invalid_argument("log page index out of range");
    return r;
}

} // namespace eqg
