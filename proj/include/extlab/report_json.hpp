#pragma once

#include <json.hpp>

#include "extlab/classify.hpp"
#include "extlab/extend.hpp"

namespace extlab {

using Json = nlohmann::json;

Json json_of(const Rat& r);
Json json_of(const RealSet& s);
Json json_of(const PiecewiseFunc& f);
Json json_of(const NormResult& n);
Json json_of(const PreimageResult& p);
Json json_of(const Retraction& r);
Json json_of(const CheckResult& c);
Json json_of(const OperatorReport& r);
Json json_of(const CasePreimage& c);
Json json_of(const PreimageChainTrace& t);
Json json_of(const BaireWitnessReport& r);
Json json_of(const ContinuityReport& r);
Json json_of(const PiecewiseContinuityReport& r);
Json json_of(const PreimageWitness& w);
Json json_of(const GalleryEntry& e);

/// Versioned envelope: {"schema": "extendlab/1", "command": ..., "result": payload}.
Json report_envelope(const std::string& command, Json payload);

}  // namespace extlab
