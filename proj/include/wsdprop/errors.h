// Copyright 2026 The wsdprop Authors
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

#ifndef WSDPROP_ERRORS_H_
#define WSDPROP_ERRORS_H_

#include <stdexcept>

namespace wsdprop {

// A guarantee of the construction was violated; indicates a bug, not bad
// input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NoPerfectMatching : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by picking-sequence extraction when every remaining slot prefers an
// available item, which certifies the matching was not rank-maximal.
class NotRankMaximal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDoublyStochastic : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IncompleteCostSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NegativeValue : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wsdprop

#endif  // WSDPROP_ERRORS_H_
