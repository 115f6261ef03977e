#ifndef FACECOVER_ERROR_HPP
#define FACECOVER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace facecover {

/// Input that cannot be parsed or violates a structural invariant
/// (dart missing from a rotation, bad involution, unknown vertex id).
class MalformedInput : public std::runtime_error {
 public:
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

/// Well-formed input that violates a hypothesis of the requested operation
/// (graph not 3-connected, wrong genus, too few roots, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed. Signals a bug or an input on which
/// an imported structural claim did not materialize.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace facecover

#endif  // FACECOVER_ERROR_HPP
