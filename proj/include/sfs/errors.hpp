#pragma once

#include <stdexcept>
#include <string>

namespace sfs {

// Input outside the domain of an operation. The CLI maps this family to exit code 2.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class DivisionByZero : public DomainError {
 public:
  explicit DivisionByZero(const std::string& what) : DomainError(what) {}
};

class SingularMatrix : public DomainError {
 public:
  explicit SingularMatrix(const std::string& what) : DomainError(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace sfs
