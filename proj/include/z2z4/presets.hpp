// Built-in codes and PD-sets: the two Hadamard Z4-linear demo codes used
// throughout the tests and CLI ("example3" and "example4").

#ifndef Z2Z4_PRESETS_HPP
#define Z2Z4_PRESETS_HPP

#include <string>

#include "z2z4/code.hpp"
#include "z2z4/decode.hpp"

namespace z2z4 {

/// Type (0,4;0,2;0), d = 4, t = 1; generators (3,2,1,0) and (2,3,0,1).
Z2Z4Code example3_code();
/// S = {id, theta, theta^2} with theta = (1,3,5,7)(2,4,6,8), I = {5,6,7,8}.
PDSet example3_pd_set();

/// Type (0,8;1,2;0), d = 8, t = 3.
Z2Z4Code example4_code();
/// S = <theta1, theta2, theta4>, I = {11,13,14,15,16}.
PDSet example4_pd_set();

/// Looks up "example3"/"example4" presets, otherwise reads a code file.
Z2Z4Code load_code(const std::string& name_or_path);
/// Looks up the preset PD-set for "example3"/"example4", otherwise reads a
/// PD-set file (n = binary length of the code it certifies).
PDSet load_pd_set(const std::string& name_or_path, std::size_t n);

}  // namespace z2z4

#endif
