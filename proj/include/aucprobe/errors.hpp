#pragma once

#include <stdexcept>
#include <string>

namespace aucprobe {

/// The AUC does not exist: every example carries the same label.
class UndefinedAucError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two guesses share the same score where distinct scores are required.
class TiedGuessesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LengthMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The oracle's query budget has been spent.
class BudgetExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No labeling attains the requested AUC for the given guesses.
class NoSatisfyingLabelingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact count exceeded the 128-bit accumulator.
class CountOverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A dataset or config file failed structural validation.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace aucprobe
