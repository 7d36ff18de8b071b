#pragma once

#include "closure/grid.hpp"

namespace closure {

extern const int kKpp2dFixtureSide;
extern const double kKpp2dFixture[];

// The stored 50x50 initial-condition fixture, bilinearly interpolated onto the
// target grid when its resolution differs.
Field kpp2d_initial_condition(const SpatialGrid& grid);

}  // namespace closure
