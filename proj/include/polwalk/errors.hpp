#pragma once

#include <stdexcept>
#include <string>

namespace polwalk {

// Malformed external input (files, CLI arguments, face lists, ...).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was called outside its contract (e.g. surgery on an edge
// traversed in both directions).
struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The graph itself violates a structural requirement (disconnected, ...).
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A "cannot happen" situation; indicates a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace polwalk
