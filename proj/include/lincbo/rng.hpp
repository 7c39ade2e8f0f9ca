#pragma once

#include <cstdint>

namespace lincbo {

/// xorshift64* generator. Deterministic and fully specified so that datasets
/// generated from a seed can be reproduced by other implementations:
///   s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27;  output = s * 0x2545F4914F6CDD1D
/// A zero seed is remapped to a fixed nonzero constant (the state must never
/// be zero).
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    /// Uniform-ish draw in [0, bound) via modulo reduction; bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

}  // namespace lincbo
