#pragma once

#include <stdexcept>
#include <string>

namespace cwb {

enum class Errc {
    invalid_argument = 1,
    guard = 2,          // size guard or infeasible instance
    no_solution = 3,
    division_by_zero = 4,
    field_mismatch = 5,
    internal = 6,
};

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, const std::string& msg)
{
    if (!ok)
        fail(Errc::invalid_argument, msg);
}

} // namespace cwb
