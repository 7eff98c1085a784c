#include "entangler/states.hpp"

#include "entangler/errors.hpp"

namespace entangler {

ThreeSpinState embed(const SubspaceState& s) {
  ThreeSpinState out;
  for (int k = 0; k < 6; ++k) out.amp(kSubspaceIndex[k]) = s.c(k);
  return out;
}

SubspaceState project(const ThreeSpinState& s, double leak_tol) {
  const double leak =
      std::max(std::abs(s.amp(kGGG)), std::abs(s.amp(kEEE)));
  if (leak > leak_tol)
    throw LeakageOutOfSubspace("amplitude " + std::to_string(leak) +
                               " on |ggg>/|eee> exceeds tolerance");
  SubspaceState out;
  for (int k = 0; k < 6; ++k) out.c(k) = s.amp(kSubspaceIndex[k]);
  return out;
}

}  // namespace entangler
