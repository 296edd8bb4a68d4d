// Copyright 2026 The CausalBid Authors. All Rights Reserved.
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

#include "causalbid/policy.h"

namespace causalbid {

std::string_view BranchName(Branch branch) {
  switch (branch) {
    case Branch::kInit:
      return "init";
    case Branch::kExplore:
      return "explore";
    case Branch::kAssign:
      return "assign";
    case Branch::kExploit:
      return "exploit";
    case Branch::kNone:
      break;
  }
  return "-";
}

}  // namespace causalbid
