#pragma once

#include <stdexcept>
#include <string>

namespace earring {

// numerical failures map to exit code 2, classification failures to 3
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ClassificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define EARRING_ERROR(Name, Base)                                   \
  struct Name : Base {                                              \
    explicit Name(const std::string& m = #Name) : Base(#Name ": " + m) {} \
  };

EARRING_ERROR(InvalidTriple, NumericalError)
EARRING_ERROR(CornerInput, NumericalError)
EARRING_ERROR(NoConvergence, NumericalError)
EARRING_ERROR(SeedDegenerate, NumericalError)
EARRING_ERROR(ContinuationStall, NumericalError)
EARRING_ERROR(FoldUnresolved, NumericalError)
EARRING_ERROR(NonTransverse, NumericalError)
EARRING_ERROR(BadDelta, NumericalError)
EARRING_ERROR(SupportViolation, ClassificationError)
EARRING_ERROR(NonSimpleArrangement, ClassificationError)
EARRING_ERROR(NonCancellable, ClassificationError)
EARRING_ERROR(UnsupportedArrow, ClassificationError)
EARRING_ERROR(TopLeftCornerHit, ClassificationError)

#undef EARRING_ERROR

}  // namespace earring
