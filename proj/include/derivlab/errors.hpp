#ifndef DERIVLAB_ERRORS_HPP
#define DERIVLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace derivlab {

// Base class for anything caused by bad user input (CLI exit code 2).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

class parse_error : public input_error {
public:
    parse_error(const std::string& msg, int line, int col)
        : input_error(msg + " (line " + std::to_string(line) + ", col " +
                      std::to_string(col) + ")"),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

class context_mismatch : public input_error {
public:
    context_mismatch() : input_error("polynomial contexts do not match") {}
};

class unknown_variable : public input_error {
public:
    explicit unknown_variable(const std::string& name)
        : input_error("unknown variable: " + name) {}
};

// Bounds would produce a system too large to solve (CLI exit code 6).
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& msg)
        : std::runtime_error(msg) {}
};

} // namespace derivlab

#endif
