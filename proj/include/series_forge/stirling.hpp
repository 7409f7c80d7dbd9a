#ifndef SERIES_FORGE_STIRLING_HPP
#define SERIES_FORGE_STIRLING_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <series_forge/exact_functions.hpp>
#include <series_forge/rational.hpp>

namespace series_forge
{

/// Triangular table of signed first-kind Stirling numbers s(n, k),
/// 0 <= k <= n <= max_n, filled from s(n+1, k) = s(n, k-1) - n s(n, k).
/// Immutable once built.
class StirlingTable
{
public:
    static constexpr int default_max_n = 64;

    explicit StirlingTable(int max_n = default_max_n) : max_n_(max_n)
    {
        if (max_n < 0) {
            throw std::invalid_argument("StirlingTable: negative size");
        }
        rows_.resize(static_cast<std::size_t>(max_n) + 1);
        rows_[0] = {BigInt(1)};
        for (int n = 0; n < max_n; ++n) {
            const auto &prev = rows_[static_cast<std::size_t>(n)];
            auto &next = rows_[static_cast<std::size_t>(n) + 1];
            next.assign(static_cast<std::size_t>(n) + 2, BigInt(0));
            for (int k = 1; k <= n + 1; ++k) {
                BigInt v = prev[static_cast<std::size_t>(k) - 1];
                if (k <= n) {
                    v -= BigInt(n) * prev[static_cast<std::size_t>(k)];
                }
                next[static_cast<std::size_t>(k)] = std::move(v);
            }
        }
    }

    [[nodiscard]] int max_n() const { return max_n_; }

    [[nodiscard]] bool contains(int n, int k) const { return 0 <= k && k <= n && n <= max_n_; }

    /// s(n, k); throws std::out_of_range unless 0 <= k <= n <= max_n.
    [[nodiscard]] const BigInt &at(int n, int k) const
    {
        if (!contains(n, k)) {
            throw std::out_of_range("stirling index (" + std::to_string(n) + ", " + std::to_string(k)
                                    + ") outside table of size " + std::to_string(max_n_));
        }
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    /// s(n, k) with the usual zero extension outside the triangle (k < 0,
    /// k > n or n < 0). Still throws when n exceeds the table.
    [[nodiscard]] BigInt value_or_zero(int n, int k) const
    {
        if (n < 0 || k < 0 || k > n) {
            return BigInt(0);
        }
        return at(n, k);
    }

    /// Copy of this table with one entry overwritten. Used to build corrupted
    /// fixtures for negative-control tests.
    [[nodiscard]] StirlingTable with_entry(int n, int k, const BigInt &value) const
    {
        StirlingTable copy = *this;
        (void)copy.at(n, k);
        copy.rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = value;
        return copy;
    }

private:
    int max_n_;
    std::vector<std::vector<BigInt>> rows_;
};

/// Process-wide table covering at least min_n rows. The table only ever
/// grows; previously returned pointers stay valid.
inline std::shared_ptr<const StirlingTable> shared_stirling(int min_n = StirlingTable::default_max_n)
{
    static std::mutex mutex;
    static std::shared_ptr<const StirlingTable> table;
    const std::lock_guard<std::mutex> lock(mutex);
    if (!table || table->max_n() < min_n) {
        int size = table ? table->max_n() : StirlingTable::default_max_n;
        while (size < min_n) {
            size *= 2;
        }
        table = std::make_shared<const StirlingTable>(size);
    }
    return table;
}

inline BigInt stirling_first(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        throw std::out_of_range("stirling_first: need 0 <= k <= n");
    }
    return shared_stirling(n)->at(n, k);
}

/// S(n, k) from the alternating sum (-1)^k/k! sum_l (-1)^l binom(k, l) l^n.
inline BigInt stirling_second(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        throw std::out_of_range("stirling_second: need 0 <= k <= n");
    }
    if (n == k) {
        return BigInt(1);
    }
    BigInt acc(0);
    for (int l = 0; l <= k; ++l) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(n));
        BigInt term = binomial(k, l) * p;
        if (l % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    if (k % 2 == 1) {
        acc = -acc;
    }
    return acc / factorial(k);
}

} // namespace series_forge

#endif
