#include "qwi/rootscan.hpp"
#include "qwi/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qwi {

namespace {

bool finite(double v) { return std::isfinite(v); }

// plain bisection, hardened against isolated non-finite midpoints (Mobius
// poles inside the bracket): a bad midpoint is replaced by an off-center
// probe, and if that fails too the bracket midpoint is returned for the
// pole filter to judge
double bisect(const std::function<double(double)>& f, double a, double b,
              double fa, const RootScanOptions& opt) {
    for (int it = 0; it < opt.max_bisections; ++it) {
        if ((b - a) <= opt.rel_width * std::max(1.0, std::abs(a))) break;
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (!finite(fm)) {
            m = a + 0.4 * (b - a);
            fm = f(m);
            if (!finite(fm)) break;
        }
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double lo, double hi,
                               const RootScanOptions& opt) {
    if (!(lo < hi) || opt.grid_points < 2)
        throw error(errc::config_error, "scan_roots: need lo < hi and >= 2 grid points");

    const int n = opt.grid_points;
    std::vector<double> xs(n), fs(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = lo + (hi - lo) * double(i) / double(n - 1);
        fs[i] = f(xs[i]);
    }

    std::vector<double> roots;
    for (int i = 0; i + 1 < n; ++i) {
        const double fa = fs[i], fb = fs[i + 1];
        if (fa == 0.0) {
            roots.push_back(xs[i]);
            continue;
        }
        if (!finite(fa) || !finite(fb)) continue;
        if ((fa > 0.0) == (fb > 0.0)) continue;

        const double root = bisect(f, xs[i], xs[i + 1], fa, opt);
        // sign changes across a pole bisect to the pole itself, where |f|
        // stays large; only keep candidates where f actually vanishes
        const double fr = std::abs(f(root));
        const double ref = std::max({1.0, std::abs(fa), std::abs(fb)});
        if (fr <= opt.pole_reject * ref) roots.push_back(root);
    }
    if (n > 0 && fs[n - 1] == 0.0) roots.push_back(xs[n - 1]);

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double x, double y) {
                                return std::abs(y - x) <
                                       1e-10 * (1.0 + std::abs(x));
                            }),
                roots.end());
    return roots;
}

} // namespace qwi
