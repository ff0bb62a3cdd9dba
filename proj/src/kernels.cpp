#include "rda/kernels.hpp"

#include <cmath>
#include <cstdlib>

namespace rda::kern {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double wdot_scalar(const double* w, const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i];
    return s;
}

double sum_scalar(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i];
    return s;
}

double max_abs_scalar(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i]));
    return m;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void hadamard_scalar(const double* x, const double* y, double* z, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) z[i] = x[i] * y[i];
}

void reaction_hutchinson_scalar(double lambda, const double* u, const double* ud,
                                double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = lambda * u[i] * (1.0 - ud[i]);
}

void reaction_logistic_scalar(double lambda, const double* mcoef, const double* acoef,
                              const double* u, const double* ud, double* out,
                              std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lambda * u[i] * (mcoef[i] - acoef[i] * ud[i]);
}

void reaction_food_limited_scalar(double lambda, double c, const double* u,
                                  const double* ud, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lambda * u[i] * (1.0 - ud[i]) / (1.0 + c * ud[i]);
}

void reaction_weak_allee_scalar(double lambda, const double* u, const double* ud,
                                double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lambda * u[i] * (1.0 + ud[i] - 2.0 * ud[i] * ud[i]);
}

void reaction_polynomial_scalar(double lambda, const double* coeff, std::size_t ncoeff,
                                const double* u, const double* ud, double* out,
                                std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double f = 0.0;
        for (std::size_t k = ncoeff; k-- > 0;) f = f * ud[i] + coeff[k];
        out[i] = lambda * u[i] * f;
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k = {
        dot_scalar,
        wdot_scalar,
        sum_scalar,
        max_abs_scalar,
        axpy_scalar,
        hadamard_scalar,
        reaction_hutchinson_scalar,
        reaction_logistic_scalar,
        reaction_food_limited_scalar,
        reaction_weak_allee_scalar,
        reaction_polynomial_scalar,
    };
    return k;
}

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Kernels& active_kernels() {
    static const Kernels& k = []() -> const Kernels& {
        const char* force = std::getenv("RDA_FORCE_SCALAR");
        if (force && force[0] == '1') return scalar_kernels();
        if (avx2_supported()) return avx2_kernels();
        return scalar_kernels();
    }();
    return k;
}

std::string active_kernel_name() {
    return &active_kernels() == &scalar_kernels() ? "scalar" : "avx2";
}

}  // namespace rda::kern
