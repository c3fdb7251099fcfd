#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace antinorm {

// 64-bit FNV-1a over raw bytes. Used for seed derivation and input digests;
// not cryptographic.
constexpr std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

// Deterministic draw source. mt19937_64 is fully specified by the standard,
// and the floating draws below are built from raw engine words instead of
// std::uniform_real_distribution (whose stream is implementation-defined),
// so identical seeds give identical samples on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    // Substream tied to a label, insensitive to draw order in other checks.
    Sampler fork(std::string_view label) const {
        return Sampler(seed_ ^ fnv1a64(label));
    }

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t raw() { return engine_(); }

    // Uniform on [0,1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1); rejects exact zero so logs and divisions stay finite.
    double unit_open() {
        double v = unit();
        while (v == 0.0) v = unit();
        return v;
    }

    // Uniform on [-r, r].
    double symmetric(double r) { return (2.0 * unit() - 1.0) * r; }

    // Uniform on [lo, hi].
    double in_range(double lo, double hi) { return lo + (hi - lo) * unit(); }

    // Log-uniform on [lo, hi], lo > 0.
    double log_range(double lo, double hi) {
        return lo * std::exp(unit() * std::log(hi / lo));
    }

    // Integer in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    bool coin() { return (engine_() & 1u) != 0; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace antinorm
