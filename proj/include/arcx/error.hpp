#pragma once

#include <stdexcept>
#include <string>

namespace arcx {

/// Malformed or unparseable input (files, command-line values, raw paths).
class InputError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// A construction that the theory guarantees failed. Always a bug.
class DefectError : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

} // namespace arcx
