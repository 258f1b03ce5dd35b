#pragma once

#include "grsc/diagram.hpp"

namespace grsc {

// The complete list of shapes of simple combinatorial bigons and triangles.
// Bigons always match I1; triangles match one of I2..V.
enum class StrebelForm { I1, I2, I3, II, III, IV, V };

const char* strebel_name(StrebelForm f);

// Structural template match. Wants a simple, valid combinatorial bigon or
// triangle: std::invalid_argument when that precondition fails,
// std::runtime_error when the diagram fits no template. The shape with a
// one-boundary-arc central face, excluded by the polygon condition, gets its
// own runtime_error message.
StrebelForm classify_strebel(const Diagram& d);

}  // namespace grsc
