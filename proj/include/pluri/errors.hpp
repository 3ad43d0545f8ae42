#pragma once

#include <stdexcept>
#include <string>

namespace pluri {

/// Operands live in jet spaces of different multi-time dimension, or an
/// operation was asked for a direction its input does not support.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pure-x polynomial is not a total x-derivative.
class NotExact : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reduction met a time derivative for which no flow was supplied.
class UnknownFlow : public std::runtime_error {
 public:
  explicit UnknownFlow(int flow)
      : std::runtime_error("no flow supplied for time index " + std::to_string(flow)),
        flow_(flow) {}
  int flow() const { return flow_; }

 private:
  int flow_;
};

/// A formal integral was built from a representative that is not pure-x,
/// or that violates the potential-convention precondition.
class MixedDirections : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pluri
