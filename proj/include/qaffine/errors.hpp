#pragma once

#include <stdexcept>
#include <string>

namespace qaffine {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define QAFFINE_ERROR(Name)                                         \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& msg) : Error(msg) {}      \
    }

QAFFINE_ERROR(DivisionByZero);
QAFFINE_ERROR(BadEntry);
QAFFINE_ERROR(EmptySequence);
QAFFINE_ERROR(NoOddPart);
QAFFINE_ERROR(LengthMismatch);
QAFFINE_ERROR(IndexOutOfRange);
QAFFINE_ERROR(InhomogeneousParity);
QAFFINE_ERROR(InhomogeneousWeight);
QAFFINE_ERROR(UnknownGenerator);
QAFFINE_ERROR(GradingError);
QAFFINE_ERROR(UnsupportedGenerator);
QAFFINE_ERROR(ZeroMode);
QAFFINE_ERROR(GuardViolation);
QAFFINE_ERROR(BadModes);
QAFFINE_ERROR(CaseGap);
QAFFINE_ERROR(InverseUnderdetermined);

#undef QAFFINE_ERROR

// Parse errors carry the offset into the input text.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace qaffine
