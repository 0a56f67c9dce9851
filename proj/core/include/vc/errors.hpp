#pragma once

#include <stdexcept>

namespace vc {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand lengths disagree or an index is out of range.
class dimension_error : public error {
public:
    using error::error;
};

/// Invalid run or sweep parameterization.
class config_error : public error {
public:
    using error::error;
};

/// Output directory or file could not be written.
class io_error : public error {
public:
    using error::error;
};

/// A world valuation contains a borderline component.
class invalid_world_error : public error {
public:
    using error::error;
};

} // namespace vc
