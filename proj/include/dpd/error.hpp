#pragma once

#include <stdexcept>
#include <string>

namespace dpd {

enum class ErrorCategory {
    config = 1,   // bad input file / parameter constraint violation
    physics = 2,  // blow-up, coincident particles, overflow of a physical limit
    protocol = 3, // communication desync, missed migration
    io = 4,       // file system failures
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& what)
        : std::runtime_error(what), category_(cat) {}
    ErrorCategory category() const { return category_; }
    int exit_code() const { return static_cast<int>(category_); }

private:
    ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory cat, const std::string& msg) {
    throw Error(cat, msg);
}

} // namespace dpd
