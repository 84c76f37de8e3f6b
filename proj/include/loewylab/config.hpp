#pragma once

#include <cstddef>

namespace loewylab {

// Size guards for the two expensive regimes: Cayley-table construction and
// dense algebra computations. LOEWYLAB_MAX_ORDER overrides both.
struct Limits {
    std::size_t max_group_order = 4096;
    std::size_t max_algebra_dim = 256;
};

const Limits& limits();

}  // namespace loewylab
