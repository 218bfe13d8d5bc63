#include "nbox/kernels.hpp"

#include "nbox/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace nbox::kernels {

std::string_view isa_name(Isa isa) noexcept
{
    switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
    }
    return "unknown";
}

bool isa_supported(Isa isa) noexcept
{
    switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(NBOX_HAVE_AVX2)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::Neon:
#if defined(NBOX_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

const KernelTable& table_for(Isa isa)
{
    if (!isa_supported(isa))
        throw DomainError("kernel ISA '" + std::string(isa_name(isa)) + "' is not available on this machine");
    switch (isa) {
#if defined(NBOX_HAVE_AVX2)
    case Isa::Avx2: return detail::avx2_table;
#endif
#if defined(NBOX_HAVE_NEON)
    case Isa::Neon: return detail::neon_table;
#endif
    default: return detail::scalar_table;
    }
}

std::vector<Isa> supported_isas()
{
    std::vector<Isa> out;
    for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
        if (isa_supported(isa))
            out.push_back(isa);
    return out;
}

namespace {

const KernelTable* pick_default() noexcept
{
    if (const char* env = std::getenv("NBOX_ISA")) {
        const std::string_view want{env};
        for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon})
            if (want == isa_name(isa) && isa_supported(isa))
                return &table_for(isa);
    }
    const auto isas = supported_isas();
    return &table_for(isas.back());
}

std::atomic<const KernelTable*>& active_slot() noexcept
{
    static std::atomic<const KernelTable*> slot{pick_default()};
    return slot;
}

}  // namespace

const KernelTable& active() noexcept
{
    return *active_slot().load(std::memory_order_relaxed);
}

void set_active_isa(Isa isa)
{
    active_slot().store(&table_for(isa), std::memory_order_relaxed);
}

void PackedPlanes::distances_from(std::size_t i, std::size_t first, std::vector<std::uint32_t>& out) const
{
    const std::size_t n = first < size_ ? size_ - first : 0;
    out.assign(n, 0);
    if (n == 0)
        return;
    const auto& k = active();
    for (std::size_t w = 0; w < words_; ++w)
        k.distance_accumulate(defs(w)[i], vals(w)[i], defs(w) + first, vals(w) + first, n, out.data());
}

}  // namespace nbox::kernels
