#ifndef BRAIDINV_ERRORS_HPP
#define BRAIDINV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidinv {

// Malformed textual input. `position` is a 0-based character offset into the
// input string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A computation would exceed its configured size budget (lifting counts,
// matrix dimensions, reduction steps).
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace braidinv

#endif
