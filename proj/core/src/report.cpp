#include "chowlab/report.hpp"

#include "chowlab/json_io.hpp"

namespace chowlab {

nlohmann::json CheckReport::to_json() const {
  nlohmann::json degs = nlohmann::json::array();
  for (const auto& v : degrees) {
    nlohmann::json w = nullptr;
    if (v.witness && ring) w = chowlab::to_json(*ring, *v.witness);
    degs.push_back({{"d", v.d}, {"pass", v.pass}, {"witness", w}});
  }
  return {{"check", check}, {"params", params}, {"degrees", degs}, {"pass", pass}};
}

}  // namespace chowlab
