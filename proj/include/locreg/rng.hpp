#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace locreg {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

// Deterministic RNG wrapper. mt19937_64 output is fixed by the standard and
// all derived draws avoid std::uniform_int_distribution, whose mapping is
// implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

    std::uint64_t u64() { return eng_(); }

    // inclusive bounds
    int range(int lo, int hi) {
        if (hi <= lo) return lo;
        return lo + static_cast<int>(u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    bool chance(int num, int den) { return range(1, den) <= num; }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(range(0, static_cast<int>(v.size()) - 1))];
    }

    Rng fork(std::uint64_t salt) { return Rng(mix_seed(u64(), salt)); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace locreg
