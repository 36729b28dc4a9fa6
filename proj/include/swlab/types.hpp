#ifndef SWLAB_TYPES_HPP
#define SWLAB_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace swlab {

// Colors are 0..q-1. Edge occupation is 0/1 per edge id.
using SpinConfig = std::vector<uint8_t>;
using EdgeConfig = std::vector<uint8_t>;

struct JointConfig {
    SpinConfig spins;
    EdgeConfig edges;
};

// Thrown when an exact-enumeration request exceeds the configured state cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed configs / inputs that fail validation.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace swlab

#endif
