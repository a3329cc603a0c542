#pragma once

#include <stdexcept>
#include <string>

namespace gcolor {

/// Raised for malformed input files and invalid user-supplied parameters.
/// The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gcolor
