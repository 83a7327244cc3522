#pragma once

#include "happy/model.hpp"

namespace happy::detail {

// Same as the public solvers but without validation, so callers may pass
// zero vertex weights (vertices that can never count).
Solution two_color_mhe(const Instance& inst);
Solution two_color_mhv(const Instance& inst);

}  // namespace happy::detail
