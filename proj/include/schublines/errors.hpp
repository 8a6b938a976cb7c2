#pragma once

#include <stdexcept>
#include <string>

namespace schublines {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rule violated by a rejected condition list.
enum class ProblemRule { OddSum, NonPositiveEntry, NotValid };

class InvalidProblem : public Error {
 public:
  InvalidProblem(ProblemRule rule, const std::string& what) : Error(what), rule_(rule) {}
  ProblemRule rule() const noexcept { return rule_; }

 private:
  ProblemRule rule_;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Raised when no rearrangement of a reduced problem satisfies the
/// branch-count condition. Firing means either the implementation or the
/// underlying lemma is wrong.
class LemmaFailure : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

class CertificateFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace schublines
