#ifndef HIROTA_ERROR_HPP
#define HIROTA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hirota {

// Library-level failure (bad input data, unsatisfiable request).
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller bug: violated precondition, unknown variable, out-of-range index.
class usage_error : public error {
public:
    explicit usage_error(const std::string& msg) : error(msg) {}
};

} // namespace hirota

#endif
