#pragma once

#include <stdexcept>
#include <string>

namespace gbhard {

// Text input could not be parsed; `line` is 1-based.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

// Structured level text violates the schema; `path` names the offending field.
class SchemaError : public std::runtime_error {
  public:
    SchemaError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}

    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

// An oracle or solver refused an instance whose search space exceeds its cap.
class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gbhard
