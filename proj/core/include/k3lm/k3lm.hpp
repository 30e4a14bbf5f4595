#pragma once

#include "k3lm/acm.hpp"
#include "k3lm/bigint.hpp"
#include "k3lm/clifford.hpp"
#include "k3lm/cone_oracle.hpp"
#include "k3lm/div_class.hpp"
#include "k3lm/enumeration.hpp"
#include "k3lm/errors.hpp"
#include "k3lm/lattice.hpp"
#include "k3lm/lm_stability.hpp"

namespace k3lm {

inline constexpr const char* kVersion = "0.3.0";

}  // namespace k3lm
