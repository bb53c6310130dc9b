#ifndef ALPHAENERGY_RANDOM_HPP
#define ALPHAENERGY_RANDOM_HPP

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace alphaenergy {

/// Seeded 64-bit generator with portable derived distributions.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard distributions and std::shuffle are not, so the
/// helpers below are written out: `below` uses rejection on the top of the
/// 64-bit range, `unit` takes the high 53 bits, and `shuffle` is
/// Fisher-Yates from the back. Equal seeds give equal streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    /// Uniform real in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = below(i);
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace alphaenergy

#endif // ALPHAENERGY_RANDOM_HPP
