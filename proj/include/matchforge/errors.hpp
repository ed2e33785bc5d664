#pragma once

#include <stdexcept>
#include <string>

namespace matchforge {

struct DisconnectedCells : std::runtime_error {
    explicit DisconnectedCells(const std::string& msg) : std::runtime_error(msg) {}
};

struct SizeLimitExceeded : std::runtime_error {
    explicit SizeLimitExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct WrongFamily : std::runtime_error {
    explicit WrongFamily(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoPerfectMatching : std::runtime_error {
    explicit NoPerfectMatching(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace matchforge
