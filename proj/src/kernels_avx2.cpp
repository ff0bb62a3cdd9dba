// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; callers must gate on avx2_supported().
#include "rda/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

namespace rda::kern {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double wdot_avx2(const double* w, const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), ab, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += w[i] * a[i] * b[i];
    return s;
}

double sum_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i];
    return s;
}

double max_abs_avx2(const double* a, std::size_t n) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_and_pd(mask, _mm256_loadu_pd(a + i)));
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    lo = _mm_max_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    double m = _mm_cvtsd_f64(_mm_max_sd(lo, sh));
    for (; i < n; ++i) m = std::max(m, std::fabs(a[i]));
    return m;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void hadamard_avx2(const double* x, const double* y, double* z, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(z + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) z[i] = x[i] * y[i];
}

void reaction_hutchinson_avx2(double lambda, const double* u, const double* ud,
                              double* out, std::size_t n) {
    const __m256d vl = _mm256_set1_pd(lambda);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d f = _mm256_sub_pd(one, _mm256_loadu_pd(ud + i));
        __m256d r = _mm256_mul_pd(_mm256_mul_pd(vl, _mm256_loadu_pd(u + i)), f);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = lambda * u[i] * (1.0 - ud[i]);
}

void reaction_logistic_avx2(double lambda, const double* mcoef, const double* acoef,
                            const double* u, const double* ud, double* out,
                            std::size_t n) {
    const __m256d vl = _mm256_set1_pd(lambda);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d f = _mm256_fnmadd_pd(_mm256_loadu_pd(acoef + i), _mm256_loadu_pd(ud + i),
                                     _mm256_loadu_pd(mcoef + i));
        __m256d r = _mm256_mul_pd(_mm256_mul_pd(vl, _mm256_loadu_pd(u + i)), f);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = lambda * u[i] * (mcoef[i] - acoef[i] * ud[i]);
}

void reaction_food_limited_avx2(double lambda, double c, const double* u,
                                const double* ud, double* out, std::size_t n) {
    const __m256d vl = _mm256_set1_pd(lambda);
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vud = _mm256_loadu_pd(ud + i);
        __m256d num = _mm256_sub_pd(one, vud);
        __m256d den = _mm256_fmadd_pd(vc, vud, one);
        __m256d f = _mm256_div_pd(num, den);
        __m256d r = _mm256_mul_pd(_mm256_mul_pd(vl, _mm256_loadu_pd(u + i)), f);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = lambda * u[i] * (1.0 - ud[i]) / (1.0 + c * ud[i]);
}

void reaction_weak_allee_avx2(double lambda, const double* u, const double* ud,
                              double* out, std::size_t n) {
    const __m256d vl = _mm256_set1_pd(lambda);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d mtwo = _mm256_set1_pd(-2.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vud = _mm256_loadu_pd(ud + i);
        // 1 + ud - 2*ud^2 = 1 + ud*(1 - 2*ud)
        __m256d inner = _mm256_fmadd_pd(mtwo, vud, one);
        __m256d f = _mm256_fmadd_pd(vud, inner, one);
        __m256d r = _mm256_mul_pd(_mm256_mul_pd(vl, _mm256_loadu_pd(u + i)), f);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) out[i] = lambda * u[i] * (1.0 + ud[i] - 2.0 * ud[i] * ud[i]);
}

void reaction_polynomial_avx2(double lambda, const double* coeff, std::size_t ncoeff,
                              const double* u, const double* ud, double* out,
                              std::size_t n) {
    const __m256d vl = _mm256_set1_pd(lambda);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vud = _mm256_loadu_pd(ud + i);
        __m256d f = _mm256_setzero_pd();
        for (std::size_t k = ncoeff; k-- > 0;)
            f = _mm256_fmadd_pd(f, vud, _mm256_set1_pd(coeff[k]));
        __m256d r = _mm256_mul_pd(_mm256_mul_pd(vl, _mm256_loadu_pd(u + i)), f);
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i) {
        double f = 0.0;
        for (std::size_t k = ncoeff; k-- > 0;) f = f * ud[i] + coeff[k];
        out[i] = lambda * u[i] * f;
    }
}

}  // namespace

const Kernels& avx2_kernels() {
    static const Kernels k = {
        dot_avx2,
        wdot_avx2,
        sum_avx2,
        max_abs_avx2,
        axpy_avx2,
        hadamard_avx2,
        reaction_hutchinson_avx2,
        reaction_logistic_avx2,
        reaction_food_limited_avx2,
        reaction_weak_allee_avx2,
        reaction_polynomial_avx2,
    };
    return k;
}

}  // namespace rda::kern

#else  // non-x86 fallback: the avx2 set aliases the scalar set

namespace rda::kern {
const Kernels& avx2_kernels() { return scalar_kernels(); }
}  // namespace rda::kern

#endif
