#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cdlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Multiplication-table validation failures. Each names the violating indices.
class NotClosedError : public Error {
 public:
  NotClosedError(int row, int col, int value)
      : Error("table not closed: entry [" + std::to_string(row) + "][" +
              std::to_string(col) + "] = " + std::to_string(value) +
              " out of range"),
        row(row), col(col), value(value) {}
  int row, col, value;
};

class NoIdentityError : public Error {
 public:
  explicit NoIdentityError(int index)
      : Error("element 0 is not a two-sided identity (fails at index " +
              std::to_string(index) + ")"),
        index(index) {}
  int index;
};

class NotAssociativeError : public Error {
 public:
  NotAssociativeError(int a, int b, int c)
      : Error("associativity fails at (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + ")"),
        a(a), b(b), c(c) {}
  int a, b, c;
};

class NoInverseError : public Error {
 public:
  explicit NoInverseError(int index)
      : Error("element " + std::to_string(index) + " has no inverse"),
        index(index) {}
  int index;
};

class OrderLimitError : public Error {
 public:
  explicit OrderLimitError(std::size_t limit)
      : Error("group order exceeds the configured limit of " +
              std::to_string(limit)),
        limit(limit) {}
  std::size_t limit;
};

class NotNormalError : public Error {
 public:
  NotNormalError() : Error("subgroup is not normal") {}
};

class NotPGroupError : public Error {
 public:
  explicit NotPGroupError(int order)
      : Error("group of order " + std::to_string(order) +
              " is not a p-group"),
        order(order) {}
  int order;
};

// Thrown by subgroup enumeration when the subgroup count (actual or
// projected) or the work limit passes the configured budget.
class SubgroupBudgetError : public Error {
 public:
  SubgroupBudgetError(std::size_t count, const std::string& what)
      : Error(what), count(count) {}
  std::size_t count;
};

class UnknownFamilyError : public Error {
 public:
  explicit UnknownFamilyError(const std::string& family)
      : Error("unknown group family '" + family + "'"), family(family) {}
  std::string family;
};

class BadParameterError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

// A structural contradiction in a computed CD lattice. Cannot fire on a
// valid group; kept as a loud failure path for falsification reporting.
class LatticeViolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cdlab
