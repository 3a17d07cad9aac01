/*
 * Copyright 2026 The Synbench Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SYNBENCH_ERRORS_HPP
#define SYNBENCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace synbench {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class CycleError : public Error {
 public:
  explicit CycleError(const std::string& what) : Error(what) {}
};

class SchemaMismatch : public Error {
 public:
  explicit SchemaMismatch(const std::string& what) : Error(what) {}
};

class InvalidParams : public Error {
 public:
  explicit InvalidParams(const std::string& what) : Error(what) {}
};

class DegenerateFit : public Error {
 public:
  explicit DegenerateFit(const std::string& what) : Error(what) {}
};

class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& what) : Error(what) {}
};

class NonEstimable : public Error {
 public:
  explicit NonEstimable(const std::string& what) : Error(what) {}
};

class EmptyCell : public Error {
 public:
  explicit EmptyCell(const std::string& what) : Error(what) {}
};

class InsufficientPoints : public Error {
 public:
  explicit InsufficientPoints(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace synbench

#endif  // SYNBENCH_ERRORS_HPP
