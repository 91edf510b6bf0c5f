#ifndef PV_ALGEBRA_ERRORS_HPP
#define PV_ALGEBRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pv {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroFunction : AlgebraError {
    DivisionByZeroFunction() : AlgebraError("division by the zero function") {}
};

struct DenominatorVanishes : AlgebraError {
    DenominatorVanishes() : AlgebraError("substitution makes the denominator identically zero") {}
};

struct NotAPerfectSquare : AlgebraError {
    explicit NotAPerfectSquare(const std::string& what) : AlgebraError("not a perfect square: " + what) {}
};

// Parser errors carry a byte offset into the input text.
struct SyntaxError : AlgebraError {
    std::size_t position;
    SyntaxError(const std::string& msg, std::size_t pos)
        : AlgebraError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownSymbol : AlgebraError {
    std::size_t position;
    UnknownSymbol(const std::string& name, std::size_t pos)
        : AlgebraError("unknown symbol '" + name + "' (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct SingularGauge : AlgebraError {
    SingularGauge() : AlgebraError("gauge matrix has identically zero determinant") {}
};

struct NotInstantiated : AlgebraError {
    explicit NotInstantiated(const std::string& what)
        : AlgebraError("value is not a rational constant: " + what) {}
};

struct NotContractible : AlgebraError {
    explicit NotContractible(const std::string& what)
        : AlgebraError("curve is not contractible: " + what) {}
};

struct UnknownCheckId : AlgebraError {
    explicit UnknownCheckId(const std::string& id) : AlgebraError("unknown check id '" + id + "'") {}
};

} // namespace pv

#endif
