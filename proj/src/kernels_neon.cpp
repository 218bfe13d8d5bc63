// aarch64 only; NEON is part of the base ISA there.

#include "nbox/kernels.hpp"

#include <bit>

#include <arm_neon.h>

namespace nbox::kernels::detail {
namespace {

// Two 64-bit lane counts.
inline uint64x2_t popcount_lanes(uint64x2_t v)
{
    return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(v)))));
}

void distance_accumulate_neon(std::uint64_t qdef, std::uint64_t qval, const std::uint64_t* defs,
                              const std::uint64_t* vals, std::size_t n, std::uint32_t* acc)
{
    const uint64x2_t qd = vdupq_n_u64(qdef);
    const uint64x2_t qv = vdupq_n_u64(qval);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t x = vandq_u64(vandq_u64(qd, vld1q_u64(defs + i)), veorq_u64(qv, vld1q_u64(vals + i)));
        const uint32x2_t counts = vmovn_u64(popcount_lanes(x));
        vst1_u32(acc + i, vadd_u32(vld1_u32(acc + i), counts));
    }
    for (; i < n; ++i)
        acc[i] += static_cast<std::uint32_t>(std::popcount(qdef & defs[i] & (qval ^ vals[i])));
}

std::size_t and_count_neon(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t n)
{
    uint64x2_t total = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint64x2_t x = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        vst1q_u64(dst + i, x);
        total = vaddq_u64(total, popcount_lanes(x));
    }
    std::size_t count = static_cast<std::size_t>(vgetq_lane_u64(total, 0) + vgetq_lane_u64(total, 1));
    for (; i < n; ++i) {
        dst[i] = a[i] & b[i];
        count += static_cast<std::size_t>(std::popcount(dst[i]));
    }
    return count;
}

void and_not_neon(std::uint64_t* dst, const std::uint64_t* mask, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(mask + i)));
    for (; i < n; ++i)
        dst[i] &= ~mask[i];
}

std::size_t popcount_neon(const std::uint64_t* a, std::size_t n)
{
    uint64x2_t total = vdupq_n_u64(0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        total = vaddq_u64(total, popcount_lanes(vld1q_u64(a + i)));
    std::size_t count = static_cast<std::size_t>(vgetq_lane_u64(total, 0) + vgetq_lane_u64(total, 1));
    for (; i < n; ++i)
        count += static_cast<std::size_t>(std::popcount(a[i]));
    return count;
}

}  // namespace

const KernelTable neon_table{
    Isa::Neon,
    &distance_accumulate_neon,
    &and_count_neon,
    &and_not_neon,
    &popcount_neon,
};

}  // namespace nbox::kernels::detail
