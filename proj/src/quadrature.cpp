#include "displab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace displab {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    bool depth_exceeded = false;
};

double simpson(double fa, double fm, double fb, double width) {
    return width * (fa + 4.0 * fm + fb) / 6.0;
}

double adapt(SimpsonState& st, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= 40) {
        st.depth_exceeded = true;
        return left + right + delta / 15.0;
    }
    return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double integrate_segment(SimpsonState& st, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = st.f(a);
    const double fm = st.f(m);
    const double fb = st.f(b);
    return adapt(st, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, 0);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol, std::span<const double> kinks) {
    if (!(a <= b)) throw std::domain_error("integrate_adaptive: requires a <= b");
    if (a == b) return 0.0;

    std::vector<double> cuts{a};
    for (double k : kinks)
        if (k > a && k < b) cuts.push_back(k);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    SimpsonState st{f};
    const double seg_tol = tol / static_cast<double>(cuts.size() - 1);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_segment(st, cuts[i], cuts[i + 1], seg_tol);

    if (st.depth_exceeded) throw AccuracyError(total);
    return total;
}

}  // namespace displab
