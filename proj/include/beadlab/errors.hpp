#ifndef BEADLAB_ERRORS_HPP
#define BEADLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace beadlab {

// Bad parameters or an argument outside the model (n < 2, wrong bead type, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class LengthError : public DomainError {
 public:
  LengthError(std::size_t expected, std::size_t got)
      : DomainError("expected " + std::to_string(expected) + " entries, got " +
                    std::to_string(got)),
        expected_(expected),
        got_(got) {}
  std::size_t expected() const { return expected_; }
  std::size_t got() const { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

class OverlapError : public DomainError {
 public:
  OverlapError(std::size_t i, std::size_t j)
      : DomainError("entries " + std::to_string(i) + " and " +
                    std::to_string(j) + " overlap"),
        i_(i),
        j_(j) {}
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

// A state-space guard was hit during enumeration or orbit search.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("state-space cap of " + std::to_string(cap) +
                           " exceeded"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// An internal invariant failed; always a bug in this library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace beadlab

#endif  // BEADLAB_ERRORS_HPP
