#pragma once

// JSON forms of maps and reports. Scalars are always written as text in the
// scalar syntax so that values in Q(zeta_m) survive a round trip.

#include "mzlab/image_engine.hpp"
#include "mzlab/linmaps.hpp"
#include "mzlab/mz_verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>

namespace mzlab::io {

using json = nlohmann::ordered_json;

/// "derivation", "endo" (or "endomorphism"), "ederivation".
MapKind parse_kind(const std::string& text);

json to_json(const Scalar& s);
json to_json(const Matrix& m);
json to_json(const Polynomial& f);
json to_json(const MultiIndex& beta);

/// Entries may be scalar text or integers.
Matrix matrix_from_json(const json& j, Field field);

/// {"kind", "n", "matrix"}; `kind_override` replaces the kind stored in the document.
LinearMapSpec map_from_json(const json& j, Field field, std::optional<MapKind> kind_override = std::nullopt);
json map_to_json(const LinearMapSpec& spec);
LinearMapSpec load_map(const std::filesystem::path& path, Field field,
                       std::optional<MapKind> kind_override = std::nullopt);

json to_json(const MembershipVerdict& v);
json to_json(const IdentityReport& r, bool include_timing = true);
json to_json(const MZScanReport& r);
json to_json(const EscapeResult& r);
json to_json(const CheckResult& c);

}  // namespace mzlab::io
