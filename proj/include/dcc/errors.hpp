// Copyright 2026 The dcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

namespace dcc {

// An operation's stated precondition does not hold for the given inputs.
class precondition_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exhaustive scan would exceed its configured budget.
class budget_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dcc
