#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace slcoset {

// Domain/parse failures carry a stable machine-readable name ("NotInBigCell",
// "ZeroArgument", ...) next to the human-readable detail. The CLI maps the
// name straight into its JSON error object.
class OpError : public std::runtime_error {
public:
    OpError(std::string name, std::string detail)
        : std::runtime_error(name + ": " + detail),
          name_(std::move(name)),
          detail_(std::move(detail)) {}

    const std::string& name() const noexcept { return name_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string name_;
    std::string detail_;
};

} // namespace slcoset
