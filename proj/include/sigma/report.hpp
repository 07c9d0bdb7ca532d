#pragma once

#include "sigma/lemmas.hpp"

namespace sigma {

inline Json to_json(const TheoremReport& rep) {
    Json conditions = Json::array();
    for (const ConditionVerdict& v : rep.verdicts) {
        Json jc{{"id", v.id}, {"holds", v.holds}, {"elapsed_ms", v.elapsed_ms}};
        if (v.holds) {
            if (!v.witness.is_null()) jc["witness"] = v.witness;
        } else if (!v.counterexample.is_null()) {
            jc["counterexample"] = v.counterexample;
        }
        conditions.push_back(std::move(jc));
    }
    Json j{{"group", rep.group_spec},
           {"sigma", rep.sigma_spec},
           {"theorem", rep.theorem},
           {"conditions", conditions},
           {"equivalent", rep.equivalent}};
    if (rep.status != "ok") j["status"] = rep.status;
    if (!rep.extra.is_null() && !rep.extra.empty()) j["extra"] = rep.extra;
    return j;
}

inline Json suite_json(const std::string& group_spec,
                       const std::string& sigma_spec, const std::string& check,
                       const SuiteReport& rep) {
    return Json{{"group", group_spec},
                {"sigma", sigma_spec},
                {"check", check},
                {"instantiations", rep.instantiations},
                {"violations", rep.violations},
                {"ok", rep.ok()}};
}

} // namespace sigma
