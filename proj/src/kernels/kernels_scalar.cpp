#include "exempt/kernels.hpp"

#include <cmath>

namespace exempt::kernels {
namespace {

double s_sum(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double s_dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void s_add(double* y, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
}

void s_axpy(double* y, double a, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void s_log2v(double* out, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::log2(x[i]);
}

double s_entropy_bits(const double* p, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = p[i];
        if (v > 0.0) acc -= v * std::log2(v);
    }
    return acc;
}

void s_sweep_xlog2x(double* acc, double base, double slope, double coeff,
                    double t0, double dt, std::size_t nt) {
    for (std::size_t i = 0; i < nt; ++i) {
        const double m = base + slope * (t0 + static_cast<double>(i) * dt);
        if (m > 0.0) acc[i] -= coeff * m * std::log2(m);
    }
}

}  // namespace

const KernelTable& scalar_table() {
    static const KernelTable table{s_sum,   s_dot,          s_add, s_axpy,
                                   s_log2v, s_entropy_bits, s_sweep_xlog2x};
    return table;
}

}  // namespace exempt::kernels
