#pragma once

#include <stdexcept>
#include <string>

namespace slognls {

// Error taxonomy maps onto CLI exit codes: parameter/config -> 2,
// divergence -> 3, statistical power -> 4.
struct structural_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parameter_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct divergence_error : std::runtime_error {
    long step = -1;
    divergence_error(const std::string& msg, long step_index)
        : std::runtime_error(msg), step(step_index) {}
};

struct statistics_error : std::runtime_error {
    std::size_t required = 0;
    statistics_error(const std::string& msg, std::size_t required_size)
        : std::runtime_error(msg), required(required_size) {}
};

}  // namespace slognls
