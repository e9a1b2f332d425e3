#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cpck {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Lexical or syntactic failure in any of the text formats.  Positions are
// 1-based; col 0 means "end of input".
class ParseError : public Error {
public:
  ParseError(int line, int col, const std::string& msg)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line), col(col), message(msg) {}

  int line;
  int col;
  std::string message;
};

// A proof step referenced an id that has not been introduced yet.
class UnknownPremise : public ParseError {
public:
  UnknownPremise(int line, int col, const std::string& id)
      : ParseError(line, col, "unknown premise '" + id + "'"), id(id) {}

  std::string id;
};

// An assume line does not match any assertion of the problem being refuted.
class AssumeMismatch : public ParseError {
public:
  AssumeMismatch(int line, int col, const std::string& id)
      : ParseError(line, col, "assumption '" + id + "' does not match any assertion"), id(id) {}

  std::string id;
};

// Ill-sorted term.  Carries a rendering of the offending subterm so callers
// can report it without holding on to the term graph.
class SortError : public Error {
public:
  SortError(const std::string& subterm, const std::string& expected, const std::string& actual)
      : Error("sort error in " + subterm + ": expected " + expected + ", got " + actual),
        subterm(subterm), expected(expected), actual(actual) {}

  explicit SortError(const std::string& msg) : Error(msg), subterm(), expected(), actual() {}

  std::string subterm;
  std::string expected;
  std::string actual;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

// Input uses a construct that is outside the supported fragment (or outside
// the fragment a particular analysis can handle).
class UnsupportedConstruct : public Error {
public:
  using Error::Error;
};

// Polynomial evaluation was asked for a variable the context does not bind.
class MissingVariable : public Error {
public:
  MissingVariable(std::uint32_t index, const std::string& space)
      : Error("evaluation context has no " + space + " value for variable #" + std::to_string(index)),
        index(index) {}

  std::uint32_t index;
};

// Translation would quantify over an uninterpreted sort with no evidence the
// sort is inhabited.
class EmptySortRisk : public Error {
public:
  explicit EmptySortRisk(const std::string& sort)
      : Error("sort '" + sort + "' is quantified over but has no witness and no nonempty marker"),
        sort(sort) {}

  std::string sort;
};

class SolverSpawnError : public Error {
public:
  using Error::Error;
};

class SolverOutputUnparsable : public Error {
public:
  using Error::Error;
};

}  // namespace cpck
