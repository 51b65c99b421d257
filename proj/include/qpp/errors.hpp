#ifndef QPP_ERRORS_HPP
#define QPP_ERRORS_HPP

/// @file errors.hpp
/// @brief Exception hierarchy for the exact q-series engine.

#include <stdexcept>
#include <string>

namespace qpp {

/// Base class of every error thrown by the engine.
class EngineError : public std::runtime_error {
public:
    explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

/// Inversion requested for a series whose q^0 coefficient is not a nonzero monomial.
class NonUnitConstantTerm : public EngineError {
public:
    explicit NonUnitConstantTerm(const std::string& what) : EngineError(what) {}
};

/// Substituting z = 0 into a Laurent polynomial with negative exponents.
class ZeroSubstitutionWithNegativeExponent : public EngineError {
public:
    explicit ZeroSubstitutionWithNegativeExponent(const std::string& what) : EngineError(what) {}
};

/// Coefficient access beyond the truncation order.
class OrderExceeded : public EngineError {
public:
    explicit OrderExceeded(const std::string& what) : EngineError(what) {}
};

/// Infinite product whose factors do not tend to 1 in the formal q-topology.
class DivergentFormalProduct : public EngineError {
public:
    explicit DivergentFormalProduct(const std::string& what) : EngineError(what) {}
};

/// A summand violated the q-valuation contract of a series driver.
class ValuationViolation : public EngineError {
public:
    explicit ValuationViolation(const std::string& what) : EngineError(what) {}
};

/// A rational parameter that must be nonzero was zero.
class DivisionByZeroParameter : public EngineError {
public:
    explicit DivisionByZeroParameter(const std::string& what) : EngineError(what) {}
};

/// A rank-count table was asked about n beyond its enumeration bound.
class TableTooSmall : public EngineError {
public:
    explicit TableTooSmall(const std::string& what) : EngineError(what) {}
};

/// Interval classification requested for n that is not the claimed pentagonal value.
class NotPentagonal : public EngineError {
public:
    explicit NotPentagonal(const std::string& what) : EngineError(what) {}
};

/// Unknown identity-check id.
class UnknownCheckId : public EngineError {
public:
    explicit UnknownCheckId(const std::string& what) : EngineError(what) {}
};

/// Unknown named series.
class UnknownSeriesName : public EngineError {
public:
    explicit UnknownSeriesName(const std::string& what) : EngineError(what) {}
};

/// Enumeration request beyond the guarded budget (override with --force).
class EnumerationBudgetExceeded : public EngineError {
public:
    explicit EnumerationBudgetExceeded(const std::string& what) : EngineError(what) {}
};

/// A fractional-offset series was unwrapped while its offset was nonzero,
/// or an offset left the denominator-24 grid.
class NonIntegralOffset : public EngineError {
public:
    explicit NonIntegralOffset(const std::string& what) : EngineError(what) {}
};

} // namespace qpp

#endif
