#pragma once

#include <filesystem>

#include <json.hpp>

#include "qmet/maps.hpp"
#include "qmet/nets.hpp"
#include "qmet/search.hpp"
#include "qmet/sequences.hpp"
#include "qmet/space.hpp"
#include "qmet/verify.hpp"

namespace qmet {

// Reports keep their field order stable and emit numbers at full
// round-trip precision; repeated runs with identical inputs produce
// byte-identical documents apart from timing fields.
using Json = nlohmann::ordered_json;

// Space files: { "n": int, "labels": [string...], "d": [[number...]...] },
// row i holding the forward distances from point i.
Json space_to_json(const QuasiMetricSpace& space);
/// Returns an unvalidated space; rejects NaN, negative and non-square input.
QuasiMetricSpace space_from_json(const Json& j);
QuasiMetricSpace read_space(const std::filesystem::path& path);
void write_space(const std::filesystem::path& path, const QuasiMetricSpace& space);

// Map files: { "images": [0-based indices...] }.
Json map_to_json(const MapUnderTest& map);
MapUnderTest map_from_json(const Json& j);
MapUnderTest read_map(const std::filesystem::path& path);

Json to_json(const Violation& v);
Json to_json(const ViolationReport& report);
Json to_json(const AsymmetryProfile& profile);
Json to_json(const CorollaryHypotheses& hypotheses);
Json to_json(const PairWitness& witness);
Json to_json(const MapClassification& classification);
Json to_json(const EpsNet& net);
Json to_json(const CirclePaperNet& net);
Json to_json(const NetCheck& check);
Json to_json(const ProbeReport& report);
Json to_json(const KCauchyCheck& check);
Json to_json(const GeneratorConfig& config);
Json to_json(const HuntInstance& instance);
Json to_json(const HuntReport& report);
Json to_json(const StressRefutation& refutation);
Json to_json(const StressReport& report);

HuntInstance hunt_instance_from_json(const Json& j);

void write_json(const std::filesystem::path& path, const Json& j);
Json read_json(const std::filesystem::path& path);

}  // namespace qmet
