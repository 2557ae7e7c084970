#ifndef CCR_ERRORS_HPP
#define CCR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccr
{

// Base class of every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A floating-point value could not be recognised as an integer at the
// current working precision. Callers escalate precision and retry.
class precision_error : public error
{
public:
    using error::error;
};

class singular_matrix_error : public error
{
public:
    singular_matrix_error(std::size_t pivot, const std::string &what)
        : error(what + " (zero pivot at index " + std::to_string(pivot) + ")"), pivot_(pivot)
    {
    }
    std::size_t pivot() const noexcept
    {
        return pivot_;
    }

private:
    std::size_t pivot_;
};

// An internal identity that must hold by construction did not.
// This signals a bug or corrupted input data, never a user mistake.
class consistency_error : public error
{
public:
    using error::error;
};

class not_found_error : public error
{
public:
    using error::error;
};

// A power table lookup could not decompose the requested exponent.
class combination_miss_error : public error
{
public:
    using error::error;
};

class parse_error : public error
{
public:
    parse_error(std::size_t line, const std::string &what)
        : error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const noexcept
    {
        return line_;
    }

private:
    std::size_t line_;
};

} // namespace ccr

#endif
