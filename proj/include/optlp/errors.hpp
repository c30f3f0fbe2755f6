// Copyright 2026 The optlp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPTLP_ERRORS_HPP_
#define OPTLP_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace optlp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Matrix expected to have full row rank does not.
class RankError : public Error {
 public:
  RankError(const std::string& what, std::ptrdiff_t rank)
      : Error(what), rank_(rank) {}
  std::ptrdiff_t rank() const { return rank_; }

 private:
  std::ptrdiff_t rank_;
};

// Scaling ratio x_i/s_i (or its inverse) is too extreme to factor reliably.
class IllConditioned : public Error {
 public:
  IllConditioned(const std::string& what, std::ptrdiff_t index)
      : Error(what), index_(index) {}
  std::ptrdiff_t index() const { return index_; }

 private:
  std::ptrdiff_t index_;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// No step length keeps the iterate strictly inside the neighborhood.
class NoFeasibleStep : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedFeature : public Error {
 public:
  using Error::Error;
};

}  // namespace optlp

#endif  // OPTLP_ERRORS_HPP_
