#pragma once

#include "qpp/kernels.hpp"

namespace qpp::kernels {

// Defined in the per-ISA translation units; return nullptr when the CPU (or
// the build) lacks the instruction set, so dispatch stays in one place.
const Ops* avx2_ops_if_supported();
const Ops* neon_ops_if_supported();

}  // namespace qpp::kernels
