#pragma once

#include <stdexcept>
#include <string>

namespace folres {

struct UnsupportedField : std::runtime_error {
    explicit UnsupportedField(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvariant : std::runtime_error {
    explicit NotInvariant(const std::string& what) : std::runtime_error(what) {}
};

struct MissingIndex : std::runtime_error {
    explicit MissingIndex(const std::string& what) : std::runtime_error(what) {}
};

struct NotProportional : std::runtime_error {
    explicit NotProportional(const std::string& what) : std::runtime_error(what) {}
};

struct ScheduleIncomplete : std::runtime_error {
    explicit ScheduleIncomplete(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace folres
