#pragma once

#include <string>

#include <json.hpp>

#include "rio/multiparty.hpp"
#include "rio/protocols.hpp"

namespace rio {

using ojson = nlohmann::ordered_json;

ojson to_json(const BranchState& state);
BranchState branch_state_from_json(const ojson& j);

ojson to_json(const MeasurementRecord& record);
ojson to_json(const ProtocolResult& result);
ojson to_json(const GeneralChannel& channel);

/// 16-hex-digit FNV-1a digest of the canonical branch list, amplitudes
/// rounded to 12 significant digits. Stable across runs for equal states.
std::string state_digest(const BranchState& state);

}  // namespace rio
