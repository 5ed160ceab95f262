#pragma once

#include <stdexcept>
#include <string>

namespace cil {

/// Malformed input or a violated precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested quantity does not exist (dual of the zero ideal, pd of the zero ideal, ...).
class Undefined : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An exhaustive computation would exceed its configured size guard.
class ResourceGuard : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Vertex-count guard for exhaustive oracles: 12, or CIL_MAX_N when set.
int oracle_vertex_limit();

/// Throws ResourceGuard when n exceeds oracle_vertex_limit().
void require_oracle_size(int n, const char* what);

}  // namespace cil
