#pragma once

#include <stdexcept>
#include <string>

namespace cislope {

// Thrown when an operation is mathematically undefined on an otherwise
// well-formed input: division by zero, undefined slope denominator,
// degenerate fiber genus, inconsistent resolution data. The CLI maps this
// to exit code 2.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace cislope
