#include "qnet/kalman.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace qnet {

namespace modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    base %= kPrime;
    while (exp) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

std::size_t rank(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[r * cols + j]);
        const auto scale = inv(a[r * cols + c]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const auto f = mul(a[i * cols + c], scale);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = sub(a[i * cols + j], mul(f, a[r * cols + j]));
        }
        ++r;
    }
    return r;
}

}  // namespace modp

namespace {

// Incremental row-echelon basis of vectors in Z_p^n.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t n) : n_(n), pivot_row_(n, npos) {}

    std::size_t rank() const { return rows_.size(); }

    void insert(std::vector<std::uint64_t> v) {
        for (std::size_t c = 0; c < n_; ++c) {
            if (v[c] == 0) continue;
            if (pivot_row_[c] == npos) {
                const auto scale = modp::inv(v[c]);
                for (auto& x : v) x = modp::mul(x, scale);
                pivot_row_[c] = rows_.size();
                rows_.push_back(std::move(v));
                return;
            }
            const auto& row = rows_[pivot_row_[c]];
            const auto f = v[c];
            for (std::size_t j = c; j < n_; ++j) v[j] = modp::sub(v[j], modp::mul(f, row[j]));
        }
    }

private:
    static constexpr std::size_t npos = SIZE_MAX;
    std::size_t n_;
    std::vector<std::size_t> pivot_row_;
    std::vector<std::vector<std::uint64_t>> rows_;
};

struct SparseEntry {
    std::size_t row;
    std::size_t col;
};

std::size_t kalman_rank(std::size_t n, const std::vector<SparseEntry>& a_entries,
                        const std::vector<SparseEntry>& b_entries, std::size_t b_cols, std::mt19937_64& rng) {
    auto weight = [&] { return 1 + rng() % (modp::kPrime - 1); };

    // A stored row-major dense; sizes here are small.
    std::vector<std::uint64_t> a(n * n, 0);
    for (const auto& e : a_entries) a[e.row * n + e.col] = weight();

    std::vector<std::vector<std::uint64_t>> block(b_cols, std::vector<std::uint64_t>(n, 0));
    for (const auto& e : b_entries) block[e.col][e.row] = weight();

    EchelonBasis basis(n);
    for (std::size_t power = 0; power < n; ++power) {
        for (const auto& col : block) basis.insert(col);
        if (basis.rank() == n || power + 1 == n) break;
        for (auto& col : block) {
            std::vector<std::uint64_t> next(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < n; ++k)
                    if (a[i * n + k] && col[k]) acc = modp::add(acc, modp::mul(a[i * n + k], col[k]));
                next[i] = acc;
            }
            col = std::move(next);
        }
    }
    return basis.rank();
}

}  // namespace

ControllabilityCertificate generic_rank_check(const QDigraph& g, const std::optional<DriverAssignment>& drivers,
                                              RankCheckOptions options) {
    if (options.trials == 0) throw std::invalid_argument("trials must be at least 1");
    const auto lti = patterns(g);
    const std::size_t n = g.state_count();

    std::vector<SparseEntry> a_entries, b_entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (lti.a_pattern(i, j)) a_entries.push_back({i, j});

    std::size_t b_cols = 0;
    if (drivers) {
        for (VertexId v : drivers->chosen_drivers) b_entries.push_back({g.state_slot(v), b_cols++});
    } else {
        b_cols = g.driver_count();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < b_cols; ++j)
                if (lti.b_pattern(i, j)) b_entries.push_back({i, j});
    }
    if (b_cols == 0 || b_entries.empty()) throw NetworkError("no drivers defined");

    ControllabilityCertificate cert;
    cert.n = n;
    cert.trials = options.trials;
    cert.seed = options.seed;
    for (std::size_t t = 0; t < options.trials && cert.achieved_rank < n; ++t) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(t)};
        std::mt19937_64 rng(seq);
        cert.achieved_rank = std::max(cert.achieved_rank, kalman_rank(n, a_entries, b_entries, b_cols, rng));
    }
    cert.full_rank = cert.achieved_rank == n;
    return cert;
}

}  // namespace qnet
