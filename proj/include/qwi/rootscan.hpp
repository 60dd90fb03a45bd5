#ifndef QWI_ROOTSCAN_HPP
#define QWI_ROOTSCAN_HPP

#include <functional>
#include <vector>

namespace qwi {

struct RootScanOptions {
    int grid_points = 4000;     // uniform bracketing grid over [lo, hi]
    double rel_width = 1e-13;   // bisection stops at this relative width
    double pole_reject = 1e-6;  // accept only if |f(root)| <= pole_reject *
                                // max(1, |f| at the bracket ends)
    int max_bisections = 200;
};

// All sign-change roots of f on [lo, hi].  The residuals this library scans
// have poles as well as zeros, so each bracketed sign change is bisected and
// then re-tested: a pole crossing keeps a large |f| at the midpoint and is
// dropped.  Non-finite midpoint values are sidestepped by retrying an
// off-center point, which keeps the bisection alive across isolated
// singularities.
std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double lo, double hi,
                               const RootScanOptions& opt = {});

} // namespace qwi

#endif
