#include "tw_grid_gen.hpp"
#include "../src/tw_grid_data.hpp"

#include <boost/math/special_functions/airy.hpp>
#include <Eigen/Dense>

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace twroot::gridgen {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int mid = (n + 1) / 2;
    for (int i = 0; i < mid; ++i) {
        // Newton iteration on P_n, starting from the Chebyshev-like guess
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

namespace {

// Beyond this argument Ai underflows to 0 in double precision anyway;
// skipping the evaluation avoids library underflow policies and time.
constexpr double airy_cutoff = 120.0;

double kernel1(double x, double y) {
    const double a = 0.5 * (x + y);
    if (a > airy_cutoff) return 0.0;
    return 0.5 * boost::math::airy_ai(a);
}

double kernel2(double x, double y, double aix, double aipx, double aiy, double aipy) {
    if (x > airy_cutoff && y > airy_cutoff) return 0.0;
    const double d = x - y;
    if (std::fabs(d) < 1e-9) {
        const double m = 0.5 * (x + y);
        const double ai = boost::math::airy_ai(m);
        const double aip = boost::math::airy_ai_prime(m);
        return aip * aip - m * ai * ai;
    }
    return (aix * aipy - aipx * aiy) / d;
}

} // namespace

double tw_cdf_fredholm(double s, int beta, int n) {
    static std::vector<double> xi, w; // cached Gauss-Legendre rule
    static int cached_n = -1;
    if (cached_n != n) {
        gauss_legendre(n, xi, w);
        cached_n = n;
    }

    // map onto (s, inf): x = s + L tan(pi (xi+1)/4)
    const double L = 10.0;
    std::vector<double> x(n), sw(n);
    for (int i = 0; i < n; ++i) {
        const double t = 0.25 * M_PI * (xi[i] + 1.0);
        const double c = std::cos(t);
        x[i] = s + L * std::tan(t);
        const double dxdxi = L * 0.25 * M_PI / (c * c);
        sw[i] = std::sqrt(w[i] * dxdxi);
    }

    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(n, n);
    if (beta == 1) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                M(i, j) -= sw[i] * kernel1(x[i], x[j]) * sw[j];
    } else if (beta == 2) {
        std::vector<double> ai(n), aip(n);
        for (int i = 0; i < n; ++i) {
            if (x[i] > airy_cutoff) { ai[i] = aip[i] = 0.0; continue; }
            ai[i] = boost::math::airy_ai(x[i]);
            aip[i] = boost::math::airy_ai_prime(x[i]);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                M(i, j) -= sw[i] * kernel2(x[i], x[j], ai[i], aip[i], ai[j], aip[j]) * sw[j];
    } else {
        throw std::invalid_argument("tw_cdf_fredholm: beta must be 1 or 2");
    }

    return M.partialPivLu().determinant();
}

GeneratedGrid generate_grid(double lo, double hi, double step, int nodes) {
    GeneratedGrid g;
    const int count = static_cast<int>(std::lround((hi - lo) / step)) + 1;
    g.abscissae.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double s = lo + step * i;
        g.abscissae.push_back(s);
        const double f1 = tw_cdf_fredholm(s, 1, nodes);
        const double f2 = tw_cdf_fredholm(s, 2, nodes);
        g.log_cdf_1.push_back(std::log(f1));
        g.log_sf_1.push_back(std::log1p(-f1));
        g.log_cdf_2.push_back(std::log(f2));
        g.log_sf_2.push_back(std::log1p(-f2));
    }
    return g;
}

namespace {

void emit_array(std::ostringstream& out, const char* name,
                const std::vector<double>& v) {
    out << "const double " << name << "[tw_grid_knots] = {\n";
    char buf[40];
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", v[i]);
        out << "    " << buf << ",\n";
    }
    out << "};\n\n";
}

} // namespace

std::string render_grid_source(const GeneratedGrid& grid) {
    std::ostringstream out;
    out << "// Embedded Tracy-Widom distribution table.  GENERATED FILE.\n"
        << "// Regenerate with:  make_tw_grid --emit-cpp > src/tw_grid_data.cpp\n"
        << "// (or `twroot grid-regen --out src/tw_grid_data.cpp`).\n"
        << "// Method: Fredholm-determinant quadrature, 120 Gauss-Legendre nodes\n"
        << "// under x = s + 10 tan(pi (xi+1)/4); grid [-10, 6] step 0.02.\n"
        << "#include \"tw_grid_data.hpp\"\n\n"
        << "namespace twroot::detail {\n\n";
    emit_array(out, "tw_grid_abscissae", grid.abscissae);
    emit_array(out, "tw1_log_cdf", grid.log_cdf_1);
    emit_array(out, "tw1_log_sf", grid.log_sf_1);
    emit_array(out, "tw2_log_cdf", grid.log_cdf_2);
    emit_array(out, "tw2_log_sf", grid.log_sf_2);
    out << "} // namespace twroot::detail\n";
    return out.str();
}

double max_diff_vs_embedded(const GeneratedGrid& grid) {
    using namespace twroot::detail;
    if (grid.abscissae.size() != tw_grid_knots)
        return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < tw_grid_knots; ++i) {
        worst = std::max(worst, std::fabs(grid.log_cdf_1[i] - tw1_log_cdf[i]));
        worst = std::max(worst, std::fabs(grid.log_sf_1[i] - tw1_log_sf[i]));
        worst = std::max(worst, std::fabs(grid.log_cdf_2[i] - tw2_log_cdf[i]));
        worst = std::max(worst, std::fabs(grid.log_sf_2[i] - tw2_log_sf[i]));
    }
    return worst;
}

} // namespace twroot::gridgen
