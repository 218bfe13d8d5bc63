#pragma once

// Data-parallel inner loops shared by the verifiers and the exact search.
//
// Every kernel has a scalar reference implementation plus SIMD variants
// (AVX2 on x86-64, NEON on aarch64). The active table is picked once at
// first use from the CPU features; NBOX_ISA=scalar|avx2|neon in the
// environment overrides the choice, and set_active_isa() does the same
// programmatically. All variants must agree bit for bit with the scalar one.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace nbox::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
    Isa isa;

    // acc[i] += popcount(qdef & defs[i] & (qval ^ vals[i])) for i < n.
    void (*distance_accumulate)(std::uint64_t qdef, std::uint64_t qval, const std::uint64_t* defs,
                                const std::uint64_t* vals, std::size_t n, std::uint32_t* acc);

    // dst[i] = a[i] & b[i]; returns the popcount of dst. dst may alias a or b.
    std::size_t (*and_count)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                             std::size_t n);

    // dst[i] &= ~mask[i].
    void (*and_not)(std::uint64_t* dst, const std::uint64_t* mask, std::size_t n);

    std::size_t (*popcount)(const std::uint64_t* a, std::size_t n);
};

bool isa_supported(Isa isa) noexcept;

/// Table for a specific ISA. Throws DomainError if the ISA is not supported
/// on this machine or was not compiled in.
const KernelTable& table_for(Isa isa);

/// The table used by the library.
const KernelTable& active() noexcept;

/// Switches the table used by the library. Throws DomainError if unsupported.
void set_active_isa(Isa isa);

/// Every ISA usable on this machine, scalar first.
std::vector<Isa> supported_isas();

namespace detail {
extern const KernelTable scalar_table;
#if defined(NBOX_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(NBOX_HAVE_NEON)
extern const KernelTable neon_table;
#endif
}  // namespace detail

/// Code stored plane by plane (structure of arrays) so that one query word
/// can be compared against all entries with distance_accumulate.
class PackedPlanes {
public:
    PackedPlanes() = default;

    template <typename StringRange>
    explicit PackedPlanes(const StringRange& strings, std::size_t width)
        : size_(std::size(strings)), words_((width + 63) / 64)
    {
        defs_.assign(words_ * size_, 0);
        vals_.assign(words_ * size_, 0);
        std::size_t i = 0;
        for (const auto& s : strings) {
            auto d = s.defined_words();
            auto v = s.value_words();
            for (std::size_t w = 0; w < words_; ++w) {
                defs_[w * size_ + i] = d[w];
                vals_[w * size_ + i] = v[w];
            }
            ++i;
        }
    }

    std::size_t size() const noexcept { return size_; }
    std::size_t words() const noexcept { return words_; }

    const std::uint64_t* defs(std::size_t word) const noexcept { return defs_.data() + word * size_; }
    const std::uint64_t* vals(std::size_t word) const noexcept { return vals_.data() + word * size_; }

    /// out[j] = distance between entry `i` and entry `first + j`, for
    /// first + j < size(). `out` is resized to fit.
    void distances_from(std::size_t i, std::size_t first, std::vector<std::uint32_t>& out) const;

private:
    std::size_t size_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> defs_;
    std::vector<std::uint64_t> vals_;
};

}  // namespace nbox::kernels
