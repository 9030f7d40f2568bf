#pragma once

// One-time generator for the embedded Tracy-Widom table.
//
// F_beta(s) is the Fredholm determinant det(I - K_beta) on L^2(s, inf):
//   beta=1:  K(x,y) = Ai((x+y)/2) / 2
//   beta=2:  K(x,y) = (Ai(x) Ai'(y) - Ai'(x) Ai(y)) / (x - y),
//            with the diagonal limit Ai'(x)^2 - x Ai(x)^2.
// The half-line is mapped to (-1,1) by x = s + 10 tan(pi (xi+1)/4) and the
// determinant is evaluated on Gauss-Legendre nodes with symmetrized
// square-root weights (Bornemann's quadrature method), which converges
// spectrally in the node count.

#include <cstddef>
#include <string>
#include <vector>

namespace twroot::gridgen {

// Nodes/weights of n-point Gauss-Legendre quadrature on (-1, 1).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// F_beta(s) by Fredholm determinant with n quadrature nodes.
double tw_cdf_fredholm(double s, int beta, int n = 120);

// The full table in the layout of src/tw_grid_data.cpp.
struct GeneratedGrid {
    std::vector<double> abscissae;
    std::vector<double> log_cdf_1, log_sf_1;
    std::vector<double> log_cdf_2, log_sf_2;
};

GeneratedGrid generate_grid(double lo = -10.0, double hi = 6.0, double step = 0.02,
                            int nodes = 120);

// Render the grid as the contents of src/tw_grid_data.cpp.
std::string render_grid_source(const GeneratedGrid& grid);

// Compare a freshly generated grid against the table compiled into the
// library.  Returns the maximum absolute difference across the four
// log arrays (0.0 means bit-identical).
double max_diff_vs_embedded(const GeneratedGrid& grid);

} // namespace twroot::gridgen
