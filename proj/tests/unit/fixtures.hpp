#pragma once

#include <string>

#include "wfcsc/instance.hpp"

namespace wfcsc::tests {

// Five elements, four sets: {1,4}, {1,2,3}, {2,3,5}, {3,4}. Element 5 is
// covered only by set 2, and the optimal cover is {0, 2}.
inline Instance tiny_instance() {
    return build_instance(5, {{1, 4}, {1, 2, 3}, {2, 3, 5}, {3, 4}}, "tiny");
}

}  // namespace wfcsc::tests
