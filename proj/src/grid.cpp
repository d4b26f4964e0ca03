#include "ptsusy/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ptsusy {

Grid::Grid(double x_min, double x_max, int n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points) {
    if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw std::invalid_argument("Grid: requires finite x_min < x_max");
    }
    if (n_points < 3) {
        throw std::invalid_argument("Grid: requires n_points >= 3");
    }
    h_ = (x_max_ - x_min_) / static_cast<double>(n_ - 1);
}

Grid Grid::interior(double a, double b, int n_points) {
    if (!(a < b)) throw std::invalid_argument("Grid::interior: requires a < b");
    const double h = (b - a) / static_cast<double>(n_points + 1);
    return Grid(a + h, b - h, n_points);
}

std::vector<double> Grid::points() const {
    std::vector<double> xs(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) xs[static_cast<std::size_t>(i)] = (*this)[i];
    return xs;
}

bool Grid::operator==(const Grid& other) const noexcept {
    return x_min_ == other.x_min_ && x_max_ == other.x_max_ && n_ == other.n_;
}

SampledFunction::SampledFunction(Grid g, std::vector<complex> v)
    : grid(g), values(std::move(v)) {
    if (values.size() != static_cast<std::size_t>(grid.n_points())) {
        throw std::invalid_argument("SampledFunction: values length must equal grid.n_points");
    }
}

SampledFunction SampledFunction::sample(const Grid& g, const std::function<complex(double)>& fn) {
    std::vector<complex> v(static_cast<std::size_t>(g.n_points()));
    for (int i = 0; i < g.n_points(); ++i) v[static_cast<std::size_t>(i)] = fn(g[i]);
    return SampledFunction(g, std::move(v));
}

SampledFunction SampledFunction::sample_real(const Grid& g, const std::function<double(double)>& fn) {
    return sample(g, [&fn](double x) { return complex(fn(x), 0.0); });
}

SampledFunction SampledFunction::zeros(const Grid& g) {
    return SampledFunction(g, std::vector<complex>(static_cast<std::size_t>(g.n_points())));
}

bool is_finite(complex v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

void SampledFunction::require_finite(const char* context) const {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (is_finite(values[static_cast<std::size_t>(i)])) continue;
        if (singular_endpoints && (i == 0 || i == n - 1)) continue;
        throw std::domain_error(std::string(context) + ": non-finite sample at x = " +
                                std::to_string(grid[i]));
    }
}

double l2_norm(const SampledFunction& f) {
    double s = 0.0;
    for (const complex& v : f.values) s += std::norm(v);
    return std::sqrt(f.grid.spacing() * s);
}

double max_abs(const SampledFunction& f) {
    double m = 0.0;
    for (const complex& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

SampledFunction difference(const SampledFunction& a, const SampledFunction& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("difference: grid mismatch");
    std::vector<complex> v(a.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values[i] - b.values[i];
    return SampledFunction(a.grid, std::move(v));
}

double max_abs_difference(const SampledFunction& a, const SampledFunction& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("max_abs_difference: grid mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

} // namespace ptsusy
