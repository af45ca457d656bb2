// Copyright 2026 The qgen Authors.
//
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

#ifndef QGEN_ERRORS_H_
#define QGEN_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgen {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed JSON input. byte_offset points into the raw buffer.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Well-formed JSON that does not follow the expected schema. path names the
// offending field, e.g. "data[3].paragraphs[0].qas[2].question".
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& reason)
      : Error(path + ": " + reason), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class SpanError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& reason)
      : Error(path + ": " + reason), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Backend could not be reached. Retryable; attempts is how many were made.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int attempts)
      : Error(what + " (after " + std::to_string(attempts) + " attempts)"),
        attempts_(attempts) {}
  int attempts() const { return attempts_; }

 private:
  int attempts_;
};

// Backend replied, but the reply violates the wire protocol.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Two documents that must describe the same run (or metric variant) do not.
class MismatchError : public Error {
 public:
  MismatchError(const std::string& field, const std::string& reason)
      : Error(field + ": " + reason), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace qgen

#endif  // QGEN_ERRORS_H_
