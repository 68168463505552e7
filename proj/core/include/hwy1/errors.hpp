#pragma once

#include <stdexcept>
#include <string>

namespace hwy1 {

// Library-level error categories. The CLI maps them onto exit codes:
// usage/input problems -> 2, infeasible or negative results -> 1,
// broken internal invariants -> 3.
enum class ErrorKind {
    input,      // malformed files, bad arguments, violated preconditions
    infeasible, // no solution exists (unreachable terminal, disconnected graph)
    cap,        // an oracle or pipeline size cap was exceeded
    internal,   // an invariant the library promises was violated
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw Error(ErrorKind::input, msg); }
[[noreturn]] inline void fail_infeasible(const std::string& msg) { throw Error(ErrorKind::infeasible, msg); }
[[noreturn]] inline void fail_cap(const std::string& msg) { throw Error(ErrorKind::cap, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw Error(ErrorKind::internal, msg); }

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
    if (!cond) throw Error(kind, msg);
}

}  // namespace hwy1
