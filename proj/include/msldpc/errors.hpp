#ifndef MSLDPC_ERRORS_HPP
#define MSLDPC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msldpc {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EvenLength : Error {
    explicit EvenLength(const std::string& w = "code length must be odd") : Error(w) {}
};

struct LengthTooSmall : Error {
    explicit LengthTooSmall(const std::string& w = "code length must be >= 3") : Error(w) {}
};

struct FieldTooLarge : Error {
    explicit FieldTooLarge(const std::string& w = "extension degree exceeds configured limit") : Error(w) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w = "division by zero") : Error(w) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& w = "polynomial not reduced modulo x^n+1") : Error(w) {}
};

struct BothZero : Error {
    explicit BothZero(const std::string& w = "gcd of two zero polynomials") : Error(w) {}
};

struct NonzeroRemainder : Error {
    explicit NonzeroRemainder(const std::string& w = "division is not exact") : Error(w) {}
};

struct NonBinaryCoefficient : Error {
    explicit NonBinaryCoefficient(const std::string& w = "minimal polynomial has coefficient outside GF(2)") : Error(w) {}
};

struct NotAFactor : Error {
    explicit NotAFactor(const std::string& w = "polynomial is not a factor of z^n+1") : Error(w) {}
};

struct NotIdempotent : Error {
    explicit NotIdempotent(const std::string& w = "polynomial is not an idempotent") : Error(w) {}
};

struct EmptySubset : Error {
    explicit EmptySubset(const std::string& w = "factor subset must be nonempty") : Error(w) {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& w = "polynomial must be nonzero") : Error(w) {}
};

struct ZeroDimension : Error {
    explicit ZeroDimension(const std::string& w = "code has dimension zero") : Error(w) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w = "enumeration budget exceeded") : Error(w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w = "cannot parse polynomial text") : Error(w) {}
};

}  // namespace msldpc

#endif
