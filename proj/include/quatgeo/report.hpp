#pragma once

#include <string>

#include "quatgeo/group_engine.hpp"

namespace quatgeo {

// Renders the exploration report for humans.
std::string render_report_text(const ExplorationReport& r);

// Stable machine-readable key-value document, one "key value" pair per
// line. Keys are a superset of the report fields and stay stable across
// releases.
std::string render_report_kv(const ExplorationReport& r);

}  // namespace quatgeo
