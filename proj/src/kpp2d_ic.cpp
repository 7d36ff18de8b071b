#include "closure/kpp2d_ic.hpp"

#include "closure/errors.hpp"

#include <algorithm>
#include <cmath>

namespace closure {

Field kpp2d_initial_condition(const SpatialGrid& grid) {
    if (grid.dim != 2) throw ConfigError("kpp2d_initial_condition: grid is not 2D");
    const int side = kKpp2dFixtureSide;
    Field out(grid.num_points());
    int r = 0;
    for (int i = 0; i < grid.count[0]; ++i) {
        // Fractional position of the target point within the fixture's own grid.
        const double fx = static_cast<double>(i) / (grid.count[0] - 1) * (side - 1);
        const int i0 = std::min(static_cast<int>(fx), side - 2);
        const double ax = fx - i0;
        for (int j = 0; j < grid.count[1]; ++j, ++r) {
            const double fy = static_cast<double>(j) / (grid.count[1] - 1) * (side - 1);
            const int j0 = std::min(static_cast<int>(fy), side - 2);
            const double ay = fy - j0;
            const double v00 = kKpp2dFixture[i0 * side + j0];
            const double v01 = kKpp2dFixture[i0 * side + j0 + 1];
            const double v10 = kKpp2dFixture[(i0 + 1) * side + j0];
            const double v11 = kKpp2dFixture[(i0 + 1) * side + j0 + 1];
            out[r] = (1 - ax) * ((1 - ay) * v00 + ay * v01) + ax * ((1 - ay) * v10 + ay * v11);
        }
    }
    return out;
}

}  // namespace closure
