#pragma once

#include <stdexcept>
#include <string>

namespace qk0 {

/// Error codes shared across the library. Contract violations throw
/// `Error`; query-style operations that can fail in normal use return
/// std::optional or a result struct instead.
enum class Errc {
    InvalidArgument,
    NotASquare,
    DivisionByZero,
    ZeroScalar,
    DimensionCapExceeded,
    RelationViolated,
    NotAHomomorphism,
    CenterTooLarge,
    NotSemisimple,
    NotAPerfectSquare,
    UnknownWitness,
    SplitTensorSplit,
    EmptyForm,
    LowDimension,
    Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace qk0
