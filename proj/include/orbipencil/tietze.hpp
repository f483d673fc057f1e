#pragma once

#include "orbipencil/presentation.hpp"

namespace orbipencil {

// Bounded, deterministic simplification pass set:
//   - free and cyclic reduction of every relator, empty relators dropped
//   - duplicate relators (up to rotation and inversion) dropped
//   - relators of length 1 kill their generator everywhere
//   - a generator occurring exactly once in some relator, with exponent +-1,
//     is eliminated by substitution
// Not a search; the same input always simplifies the same way.
Presentation tietze_simplify(Presentation p);

}  // namespace orbipencil
