#pragma once

#include <string>

#include "perminv/decisions.hpp"

namespace perminv {

/// Deterministic JSON rendering of a report. Keys appear in a fixed order;
/// polynomial coefficients are integers, lowest degree first (decimal
/// strings if they exceed 64 bits). Window dims[k] is the degree lo+k value.
std::string report_to_json(const InvariantReport& report);

/// Human-readable summary, one block per characteristic.
std::string report_to_text(const InvariantReport& report);

}  // namespace perminv
