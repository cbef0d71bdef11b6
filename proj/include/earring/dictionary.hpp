#pragma once

#include "earring/algebra.hpp"
#include "earring/curve.hpp"

namespace earring {

// Dual loops of the two parametrizing arcs, based at the top-left corner:
// the a• loop encloses corner 0, the a° loop encloses corner 3. They are
// stored as arcs from corner 1 to corner 1.
Curve dual_loop(Idem e);

// rays from a puncture to the top-left corner; crossing them
// counterclockwise reads off one letter of a chord word
struct StopRay {
  Curve ray;
  Letter letter;
};
const std::vector<StopRay>& stop_rays();

TwistedComplex curve_to_complex(const Curve& c);
Curve complex_to_curve(const TwistedComplex& c);

}  // namespace earring
