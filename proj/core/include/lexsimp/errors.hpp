#pragma once

#include <stdexcept>
#include <string>

namespace lexsimp {

// File parsing failed; carries the source name and 1-based line number
// when known (line == 0 means "not line-specific").
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : std::runtime_error(format(source, line, what)),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& what) {
    if (line == 0) return source + ": " + what;
    return source + ":" + std::to_string(line) + ": " + what;
  }
  std::string source_;
  std::size_t line_;
};

// A resource could not be loaded (bad file, duplicate ids, ...).
class LoadError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gold/prediction evaluation could not proceed (count or pairing mismatch).
class EvalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Remote scorer transport or protocol failure.
class BackendError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lexsimp
