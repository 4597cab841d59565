#pragma once

namespace quatgeo {

// Floating-point equality tolerance. All groups handled here have at most a
// few hundred elements, so accumulated error stays far below these.
inline constexpr double kEps = 1e-9;

// Looser tolerance for recognition and hashing decisions (merging closure
// elements, matching spectra of similar matrices, ...).
inline constexpr double kEpsRec = 1e-6;

}  // namespace quatgeo
