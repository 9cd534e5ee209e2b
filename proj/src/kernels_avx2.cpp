#include "fillcert/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace fillcert::kernels {

// 4-wide AVX2 variant. Uses separate mul and add (no _mm256_fmadd_pd): FMA
// rounds once where the scalar path rounds twice, and the equivalence tests
// require bit-identical output across variants.
void row_norms_sq_avx2(double bx, double by, double sx, double sy,
                       double q0, double* out, std::size_t n) {
    const __m256d vbx = _mm256_set1_pd(bx);
    const __m256d vby = _mm256_set1_pd(by);
    const __m256d vsx = _mm256_set1_pd(sx);
    const __m256d vsy = _mm256_set1_pd(sy);
    const __m256d lane = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);

    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        const __m256d q = _mm256_add_pd(_mm256_set1_pd(q0 + static_cast<double>(j)), lane);
        const __m256d x = _mm256_add_pd(vbx, _mm256_mul_pd(q, vsx));
        const __m256d y = _mm256_add_pd(vby, _mm256_mul_pd(q, vsy));
        const __m256d nsq = _mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y));
        _mm256_storeu_pd(out + j, nsq);
    }
    if (j < n) {
        row_norms_sq_scalar(bx, by, sx, sy, q0 + static_cast<double>(j), out + j, n - j);
    }
}

}  // namespace fillcert::kernels

#endif
