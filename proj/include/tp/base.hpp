#ifndef TP_BASE_HPP
#define TP_BASE_HPP

#include <stdexcept>
#include <string>

namespace tp {

// Upper bound on universe size. Conditions fit in one 16-bit mask and
// relations in sixteen of them, which keeps every algebra operation a
// handful of word operations.
inline constexpr int kMaxAtoms = 16;

// Hard error for violations of the model's preconditions: mixed state
// spaces, unknown atoms, out-of-range sizes. Never used to report an
// ordinary check verdict (those are values, not exceptions).
class ModelError : public std::runtime_error {
 public:
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tp

#endif
