#pragma once

#include <stdexcept>
#include <string>

namespace gwp {

  // Malformed input: bad JSON, bad rational literal, invalid graph file.
  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Well-formed input that violates a mathematical precondition: unknown
  // vertex, inadmissible word, order bound exceeded, mismatched graphs.
  class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace gwp
