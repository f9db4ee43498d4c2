#pragma once

#include <stdexcept>
#include <string>

namespace degen {

/// An index that must be nonnegative was negative.
struct NegativeIndexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value list whose length must match an operator order did not.
struct ArityMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Series division where the numerator vanishes to lower order than the denominator.
struct ValuationMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Series division by a denominator whose first nonzero coefficient is not a
/// nonzero rational constant.
struct NonUnitLeadingCoefficientError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Series composition with an inner series whose constant term is nonzero.
struct NonNilpotentInnerError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two routes that must agree by construction disagreed. Indicates a bug in
/// this library, never a caller error.
struct InternalIdentityError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Identity id not present in the catalog.
struct UnknownIdentityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace degen
