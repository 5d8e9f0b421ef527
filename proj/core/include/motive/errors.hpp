#pragma once

#include <stdexcept>
#include <string>

namespace motive {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LevelTooSmall : public Error {
 public:
  explicit LevelTooSmall(long level)
      : Error("level " + std::to_string(level) + " is below 3"), level_(level) {}
  long level() const { return level_; }

 private:
  long level_;
};

class LevelMismatch : public Error {
 public:
  LevelMismatch(long a, long b)
      : Error("level mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class Singular : public Error {
 public:
  Singular() : Error("matrix is singular") {}
};

class DegreeOverflow : public Error {
 public:
  DegreeOverflow() : Error("product would contain d_a^2") {}
};

class UnsupportedComposition : public Error {
 public:
  using Error::Error;
};

class UnsupportedAction : public Error {
 public:
  using Error::Error;
};

class SymbolicMultiplicity : public Error {
 public:
  SymbolicMultiplicity() : Error("numeric table requested but a multiplicity is symbolic") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownAtom : public Error {
 public:
  explicit UnknownAtom(const std::string& name) : Error("unknown atom '" + name + "'") {}
};

inline void require_level(long level) {
  if (level < 3) throw LevelTooSmall(level);
}

inline void require_same_level(long a, long b) {
  if (a != b) throw LevelMismatch(a, b);
}

}  // namespace motive
