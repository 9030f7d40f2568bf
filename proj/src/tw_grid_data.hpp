#pragma once

// Declarations for the embedded Tracy-Widom table (definitions live in
// the generated tw_grid_data.cpp; see tools/tw_grid_gen.hpp).

#include <cstddef>

namespace twroot::detail {

inline constexpr std::size_t tw_grid_knots = 801;

extern const double tw_grid_abscissae[tw_grid_knots];
extern const double tw1_log_cdf[tw_grid_knots];
extern const double tw1_log_sf[tw_grid_knots];
extern const double tw2_log_cdf[tw_grid_knots];
extern const double tw2_log_sf[tw_grid_knots];

} // namespace twroot::detail
