#pragma once

#include <stdexcept>
#include <string>

namespace lmg {

  // Malformed text input (words, points, calculations). CLI exit code 2.
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          _pos(pos) {}

    std::size_t position() const noexcept {
      return _pos;
    }

   private:
    std::size_t _pos;
  };

  // A well-formed request that is outside an operation's domain: arity
  // mismatch, undefined prefix action, invalid arity pair, a y-index outside
  // Y(n), and so on. CLI exit code 3.
  class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  // An internal consistency check failed. CLI exit code 4.
  class InvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace lmg
