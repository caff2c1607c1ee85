#pragma once
// Numeric kernels used by the hot loops (entropy sums, solver objective and
// gradient passes, grid sweeps, correlation accumulations).
//
// Every kernel exists in a scalar reference form and, on x86-64 with AVX2+FMA,
// a vectorized form. The active variant is selected once at startup via CPUID;
// set EXEMPT_AUDIT_SIMD=scalar|avx2 to force a lane. Scalar and SIMD variants
// are equivalence-tested against each other in tests/test_kernels.cpp.

#include <cstddef>
#include <string>

namespace exempt::kernels {

struct KernelTable {
    double (*sum)(const double* x, std::size_t n);
    double (*dot)(const double* x, const double* y, std::size_t n);
    void (*add)(double* y, const double* x, std::size_t n);       // y += x
    void (*axpy)(double* y, double a, const double* x, std::size_t n);
    void (*log2v)(double* out, const double* x, std::size_t n);   // x > 0
    // -sum_i p_i * log2(p_i), entries < tiny treated as exact zeros
    double (*entropy_bits)(const double* p, std::size_t n);
    // acc[i] += coeff * phi(base + slope*(t0 + i*dt)) for i in [0,nt),
    // phi(m) = -m*log2(m), phi(m<=0) = 0. Inner loop of the grid oracle.
    void (*sweep_xlog2x)(double* acc, double base, double slope, double coeff,
                         double t0, double dt, std::size_t nt);
};

// Active table (dispatch decided on first use).
const KernelTable& active();

// Name of the active variant ("scalar" or "avx2").
const std::string& active_name();

// Reference implementations, always available (used by equivalence tests).
const KernelTable& scalar_table();

// AVX2 implementations; nullptr members if not compiled in.
const KernelTable* avx2_table();

// Convenience wrappers over the active table.
inline double sum(const double* x, std::size_t n) { return active().sum(x, n); }
inline double dot(const double* x, const double* y, std::size_t n) {
    return active().dot(x, y, n);
}
inline void add(double* y, const double* x, std::size_t n) { active().add(y, x, n); }
inline void axpy(double* y, double a, const double* x, std::size_t n) {
    active().axpy(y, a, x, n);
}
inline void log2v(double* out, const double* x, std::size_t n) {
    active().log2v(out, x, n);
}
inline double entropy_bits(const double* p, std::size_t n) {
    return active().entropy_bits(p, n);
}
inline void sweep_xlog2x(double* acc, double base, double slope, double coeff,
                         double t0, double dt, std::size_t nt) {
    active().sweep_xlog2x(acc, base, slope, coeff, t0, dt, nt);
}

}  // namespace exempt::kernels
