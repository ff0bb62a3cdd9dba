// Data-parallel primitives for the field arithmetic inner loops: quadrature
// reductions, axpy-style updates, and the pointwise delayed-reaction laws
// evaluated once per time step.
//
// Every kernel has a scalar reference implementation and, on x86-64 with
// AVX2+FMA, a vectorized variant. The active set is chosen once at runtime
// (cpu probe, overridable with RDA_FORCE_SCALAR=1) and the two sets are
// equivalence-tested against each other.
#pragma once

#include <cstddef>
#include <string>

namespace rda::kern {

struct Kernels {
    // sum_i a[i]*b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // sum_i w[i]*a[i]*b[i]
    double (*wdot)(const double* w, const double* a, const double* b, std::size_t n);
    // sum_i a[i]
    double (*sum)(const double* a, std::size_t n);
    // max_i |a[i]|
    double (*max_abs)(const double* a, std::size_t n);
    // y[i] += alpha*x[i]
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    // z[i] = x[i]*y[i]
    void (*hadamard)(const double* x, const double* y, double* z, std::size_t n);

    // Delayed reaction laws: out[i] = lambda*u[i]*f(x_i, ud[i]), with ud the
    // field one delay back. The spatial dependence enters only through the
    // per-node coefficient arrays (mcoef/acoef for the heterogeneous law).
    // f = 1 - ud
    void (*reaction_hutchinson)(double lambda, const double* u, const double* ud,
                                double* out, std::size_t n);
    // f = m(x) - a(x)*ud
    void (*reaction_logistic)(double lambda, const double* mcoef, const double* acoef,
                              const double* u, const double* ud, double* out, std::size_t n);
    // f = (1 - ud)/(1 + c*ud)
    void (*reaction_food_limited)(double lambda, double c, const double* u,
                                  const double* ud, double* out, std::size_t n);
    // f = 1 + ud - 2*ud^2
    void (*reaction_weak_allee)(double lambda, const double* u, const double* ud,
                                double* out, std::size_t n);
    // f = sum_k coeff[k]*ud^k (Horner)
    void (*reaction_polynomial)(double lambda, const double* coeff, std::size_t ncoeff,
                                const double* u, const double* ud, double* out,
                                std::size_t n);
};

// Scalar reference set (always available).
const Kernels& scalar_kernels();

// AVX2+FMA set; only valid to call when avx2_supported() is true.
const Kernels& avx2_kernels();

bool avx2_supported();

// Set selected at first use: avx2 when supported unless RDA_FORCE_SCALAR=1.
const Kernels& active_kernels();

// Name of the active set ("scalar" or "avx2"), for logs and reports.
std::string active_kernel_name();

}  // namespace rda::kern
