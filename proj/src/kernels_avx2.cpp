// Compiled with -mavx2; only reached after a runtime CPU check.

#include "nbox/kernels.hpp"

#include <bit>

#include <immintrin.h>

namespace nbox::kernels::detail {
namespace {

// Nibble-lookup popcount; returns four 64-bit lane counts.
inline __m256i popcount_lanes(__m256i v)
{
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
    return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i lanes)
{
    alignas(32) std::uint64_t out[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(out), lanes);
    return static_cast<std::size_t>(out[0] + out[1] + out[2] + out[3]);
}

void distance_accumulate_avx2(std::uint64_t qdef, std::uint64_t qval, const std::uint64_t* defs,
                              const std::uint64_t* vals, std::size_t n, std::uint32_t* acc)
{
    const __m256i qd = _mm256_set1_epi64x(static_cast<long long>(qdef));
    const __m256i qv = _mm256_set1_epi64x(static_cast<long long>(qval));
    // gathers the low dword of each 64-bit lane into the low 128 bits
    const __m256i pack = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(defs + i));
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(vals + i));
        const __m256i x = _mm256_and_si256(_mm256_and_si256(qd, d), _mm256_xor_si256(qv, v));
        const __m256i counts = _mm256_permutevar8x32_epi32(popcount_lanes(x), pack);
        __m128i a = _mm_loadu_si128(reinterpret_cast<const __m128i*>(acc + i));
        a = _mm_add_epi32(a, _mm256_castsi256_si128(counts));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(acc + i), a);
    }
    for (; i < n; ++i)
        acc[i] += static_cast<std::uint32_t>(std::popcount(qdef & defs[i] & (qval ^ vals[i])));
}

std::size_t and_count_avx2(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t n)
{
    __m256i total = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i x = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                           _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), x);
        total = _mm256_add_epi64(total, popcount_lanes(x));
    }
    std::size_t count = horizontal_sum(total);
    for (; i < n; ++i) {
        dst[i] = a[i] & b[i];
        count += static_cast<std::size_t>(std::popcount(dst[i]));
    }
    return count;
}

void and_not_avx2(std::uint64_t* dst, const std::uint64_t* mask, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i));
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(m, d));
    }
    for (; i < n; ++i)
        dst[i] &= ~mask[i];
}

std::size_t popcount_avx2(const std::uint64_t* a, std::size_t n)
{
    __m256i total = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        total = _mm256_add_epi64(total, popcount_lanes(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i))));
    std::size_t count = horizontal_sum(total);
    for (; i < n; ++i)
        count += static_cast<std::size_t>(std::popcount(a[i]));
    return count;
}

}  // namespace

const KernelTable avx2_table{
    Isa::Avx2,
    &distance_accumulate_avx2,
    &and_count_avx2,
    &and_not_avx2,
    &popcount_avx2,
};

}  // namespace nbox::kernels::detail
