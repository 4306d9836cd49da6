#ifndef DETSIEVE_RNG_HPP
#define DETSIEVE_RNG_HPP

#include <cstdint>

namespace detsieve {

// SplitMix64 stream. All randomness in the library flows through these
// streams so that a 64-bit seed fully determines every run. Independent
// work items (trials, partitions, solver iterations) derive their own
// stream from (seed, tag, index), which keeps results identical under
// any parallel schedule.
class Rng {
 public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound). Rejection sampling keeps it exact.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    static Rng derive(std::uint64_t seed, std::uint64_t tag, std::uint64_t index = 0) {
        Rng mixer(seed ^ (tag * 0x9e3779b97f4a7c15ULL));
        mixer.next();
        mixer.state_ ^= index * 0xda942042e4dd58b5ULL;
        mixer.next();
        return Rng(mixer.next());
    }

 private:
    std::uint64_t state_;
};

}  // namespace detsieve

#endif
