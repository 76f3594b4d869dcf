#pragma once

#include <cstddef>
#include <stdexcept>

namespace cgt {

// Base type for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (bad rank, negative radius, ...).
class DomainError : public Error { public: using Error::Error; };
// Exact arithmetic left the representable range.
class OverflowError : public Error { public: using Error::Error; };

class EmptySampleError : public Error { public: using Error::Error; };
class EmptyInputError : public Error { public: using Error::Error; };

class NonSymmetricGeneratingSetError : public Error { public: using Error::Error; };
class NonPositiveWeightError : public Error { public: using Error::Error; };
class NonIntegerWeightsError : public Error { public: using Error::Error; };
class SchemeMismatchError : public Error { public: using Error::Error; };
class NotGeneratedError : public Error { public: using Error::Error; };
class UncoverableSetError : public Error { public: using Error::Error; };

class BudgetExceededError : public Error { public: using Error::Error; };
class OutOfRangeError : public Error { public: using Error::Error; };
class TruncationMismatchError : public Error { public: using Error::Error; };
class InsufficientRangeError : public Error { public: using Error::Error; };

class SingularMatrixError : public Error { public: using Error::Error; };
class NonFiniteError : public Error { public: using Error::Error; };

class ConfigError : public Error { public: using Error::Error; };

// Cap on the number of states a ball enumeration may settle before it
// gives up with BudgetExceededError. The COARSE_METRIC_BUDGET environment
// variable overrides the built-in default.
std::size_t enumeration_budget();

}  // namespace cgt
