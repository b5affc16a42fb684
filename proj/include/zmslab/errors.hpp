#pragma once

#include <stdexcept>
#include <string>

namespace zmslab {

// Exit-code mapping used by the CLI: usage/domain 1, precision 2, capacity 3.

struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

struct precision_error : std::runtime_error {
    precision_error(const std::string& what, double achieved_est)
        : std::runtime_error(what), achieved(achieved_est) {}
    double achieved;
};

}  // namespace zmslab
