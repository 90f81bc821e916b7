// Copyright 2026 The xtskit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef XTSKIT_ERROR_H_
#define XTSKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace xtskit {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke a precondition that well-formed code never breaks
// (mismatched block widths, wrong key length handed to a cipher, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// User-supplied data has the wrong size: image not a whole number of
// sectors, sector not a whole number of blocks, J over the hard limit.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Malformed hex, JSON, size strings.
class FormatError : public Error {
 public:
  using Error::Error;
};

class InvalidPolicyError : public Error {
 public:
  using Error::Error;
};

// A key-scope plan cannot satisfy its declared bound.
class PlanInfeasibleError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace xtskit

#endif  // XTSKIT_ERROR_H_
