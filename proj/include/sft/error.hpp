#ifndef SFT_ERROR_HPP
#define SFT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sft {

// Error categories map onto the CLI exit codes.
enum class ErrorCode {
    InvalidInput = 2,   // malformed graph/tree/sequence data
    Infeasible = 3,     // refused: disconnected input, cap exceeded, ...
    SolverFailure = 4,  // external solver missing or misbehaving
    Timeout = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }
    int exit_code() const { return static_cast<int>(code_); }

private:
    ErrorCode code_;
};

} // namespace sft

#endif
