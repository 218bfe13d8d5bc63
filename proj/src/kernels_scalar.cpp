#include "nbox/kernels.hpp"

#include <bit>

namespace nbox::kernels::detail {
namespace {

void distance_accumulate_scalar(std::uint64_t qdef, std::uint64_t qval, const std::uint64_t* defs,
                                const std::uint64_t* vals, std::size_t n, std::uint32_t* acc)
{
    for (std::size_t i = 0; i < n; ++i)
        acc[i] += static_cast<std::uint32_t>(std::popcount(qdef & defs[i] & (qval ^ vals[i])));
}

std::size_t and_count_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                             std::size_t n)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = a[i] & b[i];
        count += static_cast<std::size_t>(std::popcount(dst[i]));
    }
    return count;
}

void and_not_scalar(std::uint64_t* dst, const std::uint64_t* mask, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i)
        dst[i] &= ~mask[i];
}

std::size_t popcount_scalar(const std::uint64_t* a, std::size_t n)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        count += static_cast<std::size_t>(std::popcount(a[i]));
    return count;
}

}  // namespace

const KernelTable scalar_table{
    Isa::Scalar,
    &distance_accumulate_scalar,
    &and_count_scalar,
    &and_not_scalar,
    &popcount_scalar,
};

}  // namespace nbox::kernels::detail
