#pragma once

#include "vknot/fuzz.hpp"

namespace vknot::testing {

using vknot::random_diagram;

}  // namespace vknot::testing
