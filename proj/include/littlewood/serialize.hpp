// littlewood - canonical JSON encodings for forms, norms and reports.

#pragma once

#include "littlewood/constants.hpp"
#include "littlewood/dyadic.hpp"
#include "littlewood/form.hpp"
#include "littlewood/interp.hpp"
#include "littlewood/mixednorm.hpp"
#include "littlewood/opnorm.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace littlewood {

/// {arity, dims, entries:[[j_1,...,j_m,c],...]}, entries sorted
/// lexicographically by index.
inline nlohmann::json to_json(const MultilinearForm& form)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [idx, c] : form.entries()) {
        nlohmann::json row = nlohmann::json::array();
        for (int j : idx)
            row.push_back(j);
        row.push_back(c);
        entries.push_back(std::move(row));
    }
    return {{"arity", form.arity()}, {"dims", form.dims()}, {"entries", std::move(entries)}};
}

inline MultilinearForm form_from_json(const nlohmann::json& j)
{
    MultilinearForm form(j.at("dims").get<std::vector<int>>());
    if (j.at("arity").get<int>() != form.arity())
        throw std::invalid_argument("form JSON: arity does not match dims");
    for (const auto& row : j.at("entries")) {
        if (static_cast<int>(row.size()) != form.arity() + 1)
            throw std::invalid_argument("form JSON: malformed entry row");
        MultiIndex idx;
        for (int k = 0; k < form.arity(); ++k)
            idx.push_back(row.at(static_cast<std::size_t>(k)).get<int>());
        form.add(idx, row.at(row.size() - 1).get<std::int64_t>());
    }
    return form;
}

inline nlohmann::json to_json(const DyadicScalar& d)
{
    return {{"log2", to_string(d.log2())}, {"value", d.value()}};
}

inline nlohmann::json to_json(const NormResult& r)
{
    return {{"value", r.value}, {"witness", r.witness}};
}

inline nlohmann::json to_json(const BoundReport& r)
{
    nlohmann::json j{{"kind", to_string(r.kind)}, {"value", r.value}, {"provenance", r.provenance}};
    if (r.log2)
        j["log2"] = to_string(*r.log2);
    return j;
}

inline nlohmann::json to_json(const HullCertificate& c)
{
    nlohmann::json weights = nlohmann::json::array();
    for (const auto& w : c.weights)
        weights.push_back(to_string(w));
    return {{"weights", std::move(weights)}};
}

inline nlohmann::json to_json(const ExponentVector& q)
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& qi : q.values())
        j.push_back(to_string(qi));
    return j;
}

} // namespace littlewood
