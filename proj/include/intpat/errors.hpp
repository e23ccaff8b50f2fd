#pragma once

#include <stdexcept>
#include <string>

namespace intpat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (CSV content, unknown object ids, bad JSON).
class DataError : public Error {
public:
    using Error::Error;
};

/// A caller-side precondition was violated (length mismatch, minsup out of range, empty extent).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An enumeration guard (oracle cap, item-count guard) would be exceeded.
class LimitError : public Error {
public:
    using Error::Error;
};

/// An IS-itemset whose constraints leave an empty interval on some attribute.
class ContradictionError : public Error {
public:
    using Error::Error;
};

} // namespace intpat
