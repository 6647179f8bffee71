#ifndef CHORDALKIT_RNG_HPP
#define CHORDALKIT_RNG_HPP

#include <cstdint>

namespace chordalkit {

// splitmix64 (Steele/Lea/Flood). Fixed constants so seeded outputs are
// identical on every platform; the standard-library engines are not
// pinned down tightly enough for that.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, n); n > 0.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % n;
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

} // namespace chordalkit

#endif
