#pragma once

#include <stdexcept>
#include <string>

namespace procopt {

/// Base error for all library failures. Messages carry file/row/column
/// context where the failure came from parsing.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace procopt
