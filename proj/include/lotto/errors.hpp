#ifndef LOTTO_ERRORS_HPP
#define LOTTO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lotto {

enum class ErrorCode {
    UnsupportedParameters,
    MissingIngredient,
    InvalidIngredient,
    SearchExhausted,
    PreconditionFailed,
    ShapeError,
    IoError,
};

class DesignError : public std::runtime_error {
public:
    DesignError(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw DesignError(code, msg);
}

} // namespace lotto

#endif
