#pragma once

#include <stdexcept>

namespace bandbound {

/// Raised when an iterative numerical routine exhausts its budget or a
/// downstream computation cannot meet its accuracy contract. Input
/// validation problems throw std::invalid_argument instead.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bandbound
