#pragma once

#include "chowlab/algebra.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chowlab {

struct DegreeVerdict {
  std::uint32_t d = 0;
  bool pass = true;
  std::optional<Element> witness;
};

/// Degreewise verdict of a generation/freeness style check. Failures are
/// report content with an explicit witness, never exceptions.
struct CheckReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  std::vector<DegreeVerdict> degrees;
  bool pass = true;
  /// Presentation the witnesses live in.
  std::optional<AlgebraPresentation> ring;

  void record(DegreeVerdict v) {
    pass = pass && v.pass;
    degrees.push_back(std::move(v));
  }

  /// {"check":..,"params":{..},"degrees":[{"d":..,"pass":..,"witness":..|null}],"pass":..}
  nlohmann::json to_json() const;
};

}  // namespace chowlab
