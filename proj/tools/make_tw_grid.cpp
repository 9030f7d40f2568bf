// Regenerates the embedded Tracy-Widom table.
//
//   make_tw_grid --emit-cpp   writes src/tw_grid_data.cpp content to stdout
//   make_tw_grid --check      regenerates and diffs against the embedded
//                             table; exit 0 iff every log value agrees
//                             to 1e-10 (bit-identical on the build that
//                             produced the table)
//   make_tw_grid --spot s beta  prints F_beta(s) by direct Fredholm
//                               determinant (no table involved)

#include "tw_grid_gen.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

int main(int argc, char** argv) {
    using namespace twroot::gridgen;

    if (argc >= 2 && std::strcmp(argv[1], "--emit-cpp") == 0) {
        const GeneratedGrid grid = generate_grid();
        const std::string src = render_grid_source(grid);
        std::fwrite(src.data(), 1, src.size(), stdout);
        return 0;
    }
    if (argc >= 2 && std::strcmp(argv[1], "--check") == 0) {
        const GeneratedGrid grid = generate_grid();
        const double diff = max_diff_vs_embedded(grid);
        std::printf("max |log-value difference| vs embedded table: %.3g\n", diff);
        return diff <= 1e-10 ? 0 : 1;
    }
    if (argc >= 4 && std::strcmp(argv[1], "--spot") == 0) {
        const double s = std::atof(argv[2]);
        const int beta = std::atoi(argv[3]);
        std::printf("%.17g\n", tw_cdf_fredholm(s, beta));
        return 0;
    }
    std::fprintf(stderr,
                 "usage: make_tw_grid --emit-cpp | --check | --spot <s> <beta>\n");
    return 64;
}
