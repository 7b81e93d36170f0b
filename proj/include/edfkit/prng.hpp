#pragma once

#include <cstdint>

namespace edfkit {

/**
 * splitmix64, fixed here so simulation runs reproduce bit-exactly from the
 * seed on every platform. Standard-library distributions are deliberately
 * avoided: their output is implementation-defined.
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound) via rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        // Reject the partial top interval so every residue is equally likely.
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

  private:
    std::uint64_t state_;
};

} // namespace edfkit
