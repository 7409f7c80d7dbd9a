#ifndef SERIES_FORGE_QUADRATURE_HPP
#define SERIES_FORGE_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace series_forge
{

/// Thrown when adaptive refinement hits its depth or interval cap before
/// meeting the tolerance.
class QuadratureError : public std::runtime_error
{
public:
    QuadratureError(const std::string &what, double achieved) : std::runtime_error(what), achieved_error_(achieved) {}

    [[nodiscard]] double achieved_error() const { return achieved_error_; }

private:
    double achieved_error_;
};

struct QuadratureResult
{
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
    int max_depth = 0;
};

struct QuadratureOptions
{
    double abs_tol = 1e-12;
    int max_depth = 40;
    int max_intervals = 20000;
};

namespace detail
{

// 15-point Kronrod abscissae and weights with the embedded 7-point Gauss rule.
inline constexpr std::array<double, 8> gk15_x{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> gk15_wk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> g7_w{0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                            0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel
{
    double a;
    double b;
    double value;
    double error;
    int depth;

    bool operator<(const Panel &o) const { return error < o.error; }
};

template <typename F>
Panel gk15(F &f, double a, double b, int depth)
{
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kronrod = fc * gk15_wk[7];
    double gauss = fc * g7_w[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = h * gk15_x[static_cast<std::size_t>(i)];
        const double sum = f(c - dx) + f(c + dx);
        kronrod += gk15_wk[static_cast<std::size_t>(i)] * sum;
        if (i % 2 == 1) {
            gauss += g7_w[static_cast<std::size_t>(i / 2)] * sum;
        }
    }
    return {a, b, kronrod * h, std::abs((kronrod - gauss) * h), depth};
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b]:
/// the panel with the largest error estimate is bisected until the summed
/// estimate drops below abs_tol. f is never evaluated at the endpoints.
template <typename F>
QuadratureResult integrate_adaptive(F f, double a, double b, const QuadratureOptions &opt = {})
{
    if (!(a <= b)) {
        throw std::invalid_argument("integrate_adaptive: need a <= b");
    }
    QuadratureResult out;
    if (a == b) {
        return out;
    }
    std::priority_queue<detail::Panel> heap;
    heap.push(detail::gk15(f, a, b, 0));
    double err = heap.top().error;
    while (err > opt.abs_tol) {
        const detail::Panel worst = heap.top();
        if (worst.depth >= opt.max_depth) {
            throw QuadratureError("quadrature: depth cap " + std::to_string(opt.max_depth) + " reached, error "
                                      + std::to_string(err),
                                  err);
        }
        if (static_cast<int>(heap.size()) >= opt.max_intervals) {
            throw QuadratureError("quadrature: interval cap reached, error " + std::to_string(err), err);
        }
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const detail::Panel left = detail::gk15(f, worst.a, mid, worst.depth + 1);
        const detail::Panel right = detail::gk15(f, mid, worst.b, worst.depth + 1);
        err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        if (err <= opt.abs_tol) {
            break;
        }
        // the running error sum drifts; recompute it from the panels now and then
        if (heap.size() % 64 == 0) {
            std::vector<detail::Panel> all;
            err = 0.0;
            while (!heap.empty()) {
                all.push_back(heap.top());
                err += heap.top().error;
                heap.pop();
            }
            for (const auto &p : all) {
                heap.push(p);
            }
        }
    }
    out.value = 0.0;
    out.abs_error = 0.0;
    out.intervals = static_cast<int>(heap.size());
    while (!heap.empty()) {
        out.value += heap.top().value;
        out.abs_error += heap.top().error;
        out.max_depth = std::max(out.max_depth, heap.top().depth);
        heap.pop();
    }
    return out;
}

} // namespace series_forge

#endif
