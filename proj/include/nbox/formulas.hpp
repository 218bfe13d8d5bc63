#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace nbox {

/// n-th term (n >= 1) of the non-decreasing list of integers >= 2 in which
/// every 3 * 2^r appears twice: 2, 3, 3, 4, 5, 6, 6, 7, ...
std::uint64_t seq_a(std::uint64_t n);

/// b(2) = 4, b(d) = 4 + a(1) + ... + a(d - 2). Throws DomainError for d < 2.
std::uint64_t seq_b(std::uint64_t d);

/// Closed form of b(d) for d >= 4. Throws DomainError for d < 4.
std::uint64_t seq_b_closed_form(std::uint64_t d);

/// c(2) = 1; c(n) = min { d >= 2 : b(d) >= n } for n >= 3. Throws
/// DomainError for n < 2.
std::uint64_t seq_c(std::uint64_t n);

/// Values of a, b or c over [from, to].
enum class Sequence { A, B, C };
std::vector<std::uint64_t> sequence_range(Sequence seq, std::uint64_t from, std::uint64_t to);

/// Bounds on non-joker counts at fold depth k, from the seed statistics:
/// (min{2 kappa0 - 1, mu0} + 2k, max{2 K0 - 1, M0} + 2k). Signed because
/// kappa0 = 0 makes the lower bound negative at k = 0.
std::pair<std::int64_t, std::int64_t> distribution_bounds(std::int64_t mu0, std::int64_t big_m0,
                                                          std::int64_t kappa0, std::int64_t big_k0,
                                                          std::int64_t k);

}  // namespace nbox
