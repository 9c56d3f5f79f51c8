// Copyright 2026 The reliattack Authors.
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

#ifndef RELIATTACK_ERROR_HPP
#define RELIATTACK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace reliattack {

/// An argument violates an operation's precondition (bad player index,
/// wrong topology, malformed instance, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact computation would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::string cap_name, long cap)
      : std::runtime_error(what + " (cap " + cap_name + " = " +
                           std::to_string(cap) + ")"),
        cap_name_(std::move(cap_name)),
        cap_(cap) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  long cap() const noexcept { return cap_; }

 private:
  std::string cap_name_;
  long cap_;
};

}  // namespace reliattack

#endif  // RELIATTACK_ERROR_HPP
