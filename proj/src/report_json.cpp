#include <json.hpp>

#include "displab/verify.hpp"

namespace displab {

namespace {

nlohmann::json to_json_obj(const ResidualReport& r) {
    nlohmann::json j;
    j["equation"] = r.equation;
    j["h"] = r.h;
    j["linf"] = r.linf;
    j["l2"] = r.l2;
    j["order"] = r.order ? nlohmann::json(*r.order) : nlohmann::json(nullptr);
    j["n_samples"] = r.n_samples;
    j["n_skipped"] = r.n_skipped;
    return j;
}

}  // namespace

std::string report_to_json(const ResidualReport& r) { return to_json_obj(r).dump(2); }

std::string reports_to_json(const std::vector<ResidualReport>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) arr.push_back(to_json_obj(r));
    return arr.dump(2);
}

}  // namespace displab
