#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace ptsusy {

using complex = std::complex<double>;

/// Uniform one-dimensional grid x_i = x_min + i*h, h = (x_max - x_min)/(n - 1).
class Grid {
public:
    Grid(double x_min, double x_max, int n_points);

    /// Grid of n points strictly inside (a, b): spacing h = (b - a)/(n + 1),
    /// first point a + h, last point b - h.  Used for domains with singular
    /// endpoints.
    static Grid interior(double a, double b, int n_points);

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    int n_points() const noexcept { return n_; }
    double spacing() const noexcept { return h_; }
    double operator[](int i) const noexcept { return x_min_ + i * h_; }
    std::vector<double> points() const;

    bool operator==(const Grid& other) const noexcept;

private:
    double x_min_;
    double x_max_;
    int n_;
    double h_;
};

/// Complex-valued function tabulated on a uniform grid.
struct SampledFunction {
    Grid grid;
    std::vector<complex> values;
    /// When set, non-finite samples are tolerated at the first/last point.
    bool singular_endpoints = false;

    SampledFunction(Grid g, std::vector<complex> v);

    static SampledFunction sample(const Grid& g, const std::function<complex(double)>& fn);
    static SampledFunction sample_real(const Grid& g, const std::function<double(double)>& fn);
    static SampledFunction zeros(const Grid& g);

    int size() const noexcept { return grid.n_points(); }

    /// Throws std::domain_error if a sample is non-finite (endpoints excepted
    /// when singular_endpoints is set).
    void require_finite(const char* context) const;
};

bool is_finite(complex v);

/// sqrt(h * sum |v_i|^2): discrete L2 norm.
double l2_norm(const SampledFunction& f);
double max_abs(const SampledFunction& f);

/// Pointwise a - b (grids must match).
SampledFunction difference(const SampledFunction& a, const SampledFunction& b);

/// Largest |a_i - b_i| over the common grid.
double max_abs_difference(const SampledFunction& a, const SampledFunction& b);

} // namespace ptsusy
