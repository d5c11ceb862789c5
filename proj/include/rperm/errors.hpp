#pragma once

#include <stdexcept>

namespace rperm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary series operation received operands of different truncation orders.
struct OrderMismatchError : Error {
    using Error::Error;
};

// Composition inner series has a nonzero constant term.
struct NonzeroConstantTermError : Error {
    using Error::Error;
};

// Requested enumeration would exceed the configured cap.
struct CapacityExceededError : Error {
    using Error::Error;
};

// Sequence is not a valid permutation of the requested multiset.
struct InvalidPermutationError : Error {
    using Error::Error;
};

// Tree violates the increasing-tree invariants (arity, label order, duplicates).
struct MalformedTreeError : Error {
    using Error::Error;
};

// Skeleton arity s must satisfy 0 <= s < r.
struct InvalidSkeletonArityError : Error {
    using Error::Error;
};

}  // namespace rperm
