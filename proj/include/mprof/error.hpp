#ifndef MPROF_ERROR_HPP
#define MPROF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mprof {

// Invalid argument or argument combination. CLI exit code 2.
class ParameterError : public std::invalid_argument {
public:
  explicit ParameterError(const std::string &msg) : std::invalid_argument(msg) {}
};

// A mode/algorithm combination that is not supported (e.g. AB-join SCRIMP).
class UnsupportedError : public ParameterError {
public:
  explicit UnsupportedError(const std::string &msg) : ParameterError(msg) {}
};

// A pipeline step was asked to run on a profile that lacks what it needs
// (partial coverage, missing left/right indexes, data not kept). Exit code 3.
class StaleProfileError : public std::runtime_error {
public:
  explicit StaleProfileError(const std::string &msg) : std::runtime_error(msg) {}
};

// File ingestion / serialization failure. Exit code 4.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace mprof

#endif
