#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hdiff {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A denominator factor vanishes at the evaluation point.
class PoleError : public Error {
public:
  using Error::Error;
};

// An operation left the coefficient ring (e.g. division by a polynomial
// that is not a product of shifted differences).
class DomainError : public Error {
public:
  using Error::Error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

// The element does not satisfy the Delta-system.
class NotInW : public Error {
public:
  using Error::Error;
};

// A sigma vector violates the flatness system; carries the failing (i, j).
class NotFlat : public Error {
public:
  NotFlat(std::string what, int i, int j) : Error(std::move(what)), i_(i), j_(j) {}
  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }

private:
  int i_;
  int j_;
};

// Two independent computations of the same quantity disagree.
class MismatchError : public Error {
public:
  using Error::Error;
};

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace hdiff
