#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qnet/graph.hpp"
#include "qnet/matching.hpp"

namespace qnet {

/// Arithmetic modulo the Mersenne prime 2^31 - 1.
namespace modp {

inline constexpr std::uint64_t kPrime = 2147483647ULL;

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) { return (a + b) % kPrime; }
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return (a + kPrime - b) % kPrime; }
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return (a * b) % kPrime; }
std::uint64_t pow(std::uint64_t base, std::uint64_t exp);
inline std::uint64_t inv(std::uint64_t a) { return pow(a, kPrime - 2); }

/// Rank of a dense row-major rows x cols matrix over Z_p (Gaussian
/// elimination; the argument is consumed).
std::size_t rank(std::vector<std::uint64_t> matrix, std::size_t rows, std::size_t cols);

}  // namespace modp

struct ControllabilityCertificate {
    bool full_rank = false;
    std::size_t achieved_rank = 0;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::uint64_t field_prime = modp::kPrime;
    std::uint64_t seed = 0;

    friend bool operator==(const ControllabilityCertificate&, const ControllabilityCertificate&) = default;
};

struct RankCheckOptions {
    std::size_t trials = 3;
    std::uint64_t seed = 42;
};

/// Kalman rank test on random instantiations of the (A, B) pattern.
///
/// Every structurally nonzero entry gets an independent uniform weight in
/// [1, p-1]; K = [B, AB, ..., A^{N-1} B] is built block by block and its rank
/// taken exactly over Z_p. The certificate keeps the best rank over all
/// trials, stopping early once it reaches N.
///
/// B comes from the drive edges of `g` (one column per driver vertex) unless
/// `drivers` is given, in which case each chosen driver vertex gets its own
/// unit column. Throws NetworkError when B would have no columns, and
/// std::invalid_argument when trials is zero.
ControllabilityCertificate generic_rank_check(const QDigraph& g,
                                              const std::optional<DriverAssignment>& drivers = std::nullopt,
                                              RankCheckOptions options = {});

}  // namespace qnet
