// Copyright (c) sccpe contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef SCCPE_ERROR_HPP
#define SCCPE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sccpe {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formula mixes sorts for one variable name or is otherwise ill-typed.
class MalformedFormula : public Error {
 public:
  using Error::Error;
};

/// The formula lies outside the difference-logic fragment decided internally.
class FragmentUnsupported : public Error {
 public:
  using Error::Error;
};

/// DNF expansion exceeded its conjunct limit, or case splitting its budget.
class DnfLimitExceeded : public FragmentUnsupported {
 public:
  using FragmentUnsupported::FragmentUnsupported;
};

/// The external solver could not be run or answered something unreadable.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// A verdict was Unknown and the unknown policy demands failure.
class SolverInconclusive : public Error {
 public:
  using Error::Error;
};

/// Text could not be read as a formula, program, or JSON state.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sccpe

#endif  // SCCPE_ERROR_HPP
