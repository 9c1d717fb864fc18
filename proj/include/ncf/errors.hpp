#pragma once

#include <stdexcept>
#include <string>

namespace ncf {

/// Bad arguments from the caller: out-of-range labels, d not dividing n, an
/// edge set that is not a non-crossing forest, and so on.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical claim the library relies on did not hold: an exact
/// division left a remainder, a bijection produced an invalid forest, a
/// structural lemma failed. These are never expected on valid input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ncf
