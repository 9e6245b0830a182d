#pragma once

#include <stdexcept>
#include <string>

namespace sgf {

// Malformed or inconsistent input data (files, graph specs). Exit status 1.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size guard on an exhaustive-search entry point was exceeded. Exit status 2.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural internal assertion failed. This is a bug in the library,
// never a user error. Exit status 3.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void invariant(bool cond, const std::string& what) {
    if (!cond) throw InvariantError(what);
}

}  // namespace sgf
