#pragma once

#include <stdexcept>
#include <string>

namespace poisson {

// Bad caller input: malformed JSON, unknown fixture, violated precondition.
// The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant: something the library guarantees failed to hold.
// The CLI maps this to exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace poisson
