#pragma once

#include <stdexcept>

namespace stieltjes2d {

struct DegenerateIntegrator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NodeOutOfDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Unconverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace stieltjes2d
