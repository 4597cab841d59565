#pragma once

#include "quatgeo/group_engine.hpp"

namespace quatgeo {

// The five-generator subgroup of Aff(2,H) used as the running test group:
//   A = translation by (0, 1)
//   B = [[1, -1, 0], [0, 1, i], [0, 0, 1]]
//   C = translation by (1, 0)        ( = [A, B] )
//   D = translation by (j, 0)        ( = S^2 )
//   S = [[1, 0, j/2], [0, -1, i], [0, 0, 1]]
// <A,B,C,D> is unipotent; adding S gives a group with phi image {1, -1}.
GeneratedGroup fixture_example();

}  // namespace quatgeo
