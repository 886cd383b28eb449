#ifndef STIELTJES_ERRORS_HPP
#define STIELTJES_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace stieltjes {

// Domain errors (bad data, violated preconditions) carry the pipeline stage
// that rejected the input.  I/O and schema problems use parse_error instead;
// the CLI maps the two classes to exit codes 1 and 2.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string stage, const std::string& message)
        : std::runtime_error("[" + stage + "] " + message), stage_(std::move(stage)) {}

    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace stieltjes

#endif
