#ifndef SWLAB_RNG_HPP
#define SWLAB_RNG_HPP

#include <cstdint>

namespace swlab {

// splitmix64 finalizer; bijective on 64-bit words.
inline uint64_t mix64(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// Counter-based generator: every word is a pure function of
// (seed, replica, step, slot). Tapes are random-access, so a run can be
// replayed from its config alone and coupled chains can share draws.
class StepTape {
public:
    StepTape(uint64_t seed, uint64_t replica, uint64_t step, uint64_t phase = 0)
        : key_(mix64(seed ^ mix64(replica + 0x9e3779b97f4a7c15ULL) ^
                     mix64(step + 0xd1b54a32d192ed03ULL))),
          phase_(phase) {}

    // Same (seed, replica, step) but an independent slot namespace; used by
    // composed chain steps (e.g. K then T) so sub-steps draw fresh numbers.
    StepTape with_phase(uint64_t phase) const {
        StepTape t = *this;
        t.phase_ = phase;
        return t;
    }

    double edge_uniform(int e) const { return to_unit(word(0, static_cast<uint64_t>(e))); }

    int vertex_color(int v, int q) const {
        double u = to_unit(word(1, static_cast<uint64_t>(v)));
        int c = static_cast<int>(u * q);
        return c >= q ? q - 1 : c;
    }

    double aux_uniform(int i) const { return to_unit(word(2, static_cast<uint64_t>(i))); }

private:
    uint64_t word(uint64_t cls, uint64_t idx) const {
        // phase/class/index packed injectively for idx < 2^32, cls < 2^8.
        return mix64(key_ ^ mix64((phase_ << 40) | (cls << 32) | idx));
    }

    static double to_unit(uint64_t w) { return static_cast<double>(w >> 11) * 0x1.0p-53; }

    uint64_t key_;
    uint64_t phase_;
};

inline StepTape make_tape(uint64_t master_seed, uint64_t replica, uint64_t step) {
    return StepTape(master_seed, replica, step);
}

} // namespace swlab

#endif
