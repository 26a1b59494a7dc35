// AVX2/FMA variant of the affine point-count kernel: four x values per lane
// group, Horner evaluation in double precision (all intermediates < 2^53),
// then a table lookup of the quadratic character.
#include <cstdint>
#include <vector>

#include "g2split/genus2.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#endif

namespace g2split::detail {

#if defined(__AVX2__) && defined(__FMA__)

bool avx2_compiled() { return true; }

AffineTally tally_affine_fp_avx2(const std::vector<std::uint64_t>& coeffs, std::uint64_t p,
                                 const std::vector<std::uint8_t>& chi) {
    AffineTally t;
    const std::size_t n = coeffs.size();
    const double pd = static_cast<double>(p);
    const __m256d vp = _mm256_set1_pd(pd);
    const __m256d vinv = _mm256_set1_pd(1.0 / pd);
    const __m256d vzero = _mm256_setzero_pd();
    const __m256d vstep = _mm256_set1_pd(4.0);
    if (n > 16) throw Error(ErrorKind::unsupported, "AVX2 kernel handles degree <= 15");
    __m256d vc[16];
    for (std::size_t k = 0; k < n; ++k) vc[k] = _mm256_set1_pd(static_cast<double>(coeffs[k]));

    __m256d vx = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
    std::uint64_t x = 0;
    alignas(32) double out[4];
    for (; x + 4 <= p; x += 4) {
        __m256d acc = vc[n - 1];
        for (std::size_t k = n - 1; k-- > 0;) {
            __m256d prod = _mm256_fmadd_pd(acc, vx, vc[k]);
            __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, vinv));
            __m256d r = _mm256_fnmadd_pd(q, vp, prod);
            r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vzero, _CMP_LT_OQ), vp));
            r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
            acc = r;
        }
        _mm256_store_pd(out, acc);
        for (double v : out) {
            auto a = static_cast<std::uint64_t>(v);
            if (a == 0)
                ++t.zeros;
            else
                t.squares += chi[a];
        }
        vx = _mm256_add_pd(vx, vstep);
    }
    for (; x < p; ++x) {
        std::uint64_t acc = coeffs[n - 1];
        for (std::size_t k = n - 1; k-- > 0;) acc = (acc * x + coeffs[k]) % p;
        if (acc == 0)
            ++t.zeros;
        else
            t.squares += chi[acc];
    }
    return t;
}

#else

bool avx2_compiled() { return false; }

AffineTally tally_affine_fp_avx2(const std::vector<std::uint64_t>&, std::uint64_t, const std::vector<std::uint8_t>&) {
    throw Error(ErrorKind::unsupported, "built without AVX2 support");
}

#endif

}  // namespace g2split::detail
