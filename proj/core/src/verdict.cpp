#include "witt/verdict.hpp"

namespace witt {

nlohmann::json to_json(const DescentVerdict& v) {
  nlohmann::json j;
  j["decision"] = to_string(v.decision);
  j["route"] = v.route;
  j["summary"] = v.summary;
  j["obstruction"] = v.obstruction;
  j["certificate"] = v.certificate;
  j["verified"] = v.verified ? nlohmann::json(*v.verified) : nlohmann::json(nullptr);
  j["details"] = v.details;
  return j;
}

}  // namespace witt
