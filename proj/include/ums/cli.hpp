// Copyright 2026 The ums Authors
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

#pragma once

namespace ums::cli {

/// Entry point of the ums tool. Commands: synthesize, histogram,
/// robustness, precision, bench, cnot, su3-check, sample-haar,
/// coupled-mode. Returns the process exit code: 0 success, 1 validation
/// failure, 2 non-converged synthesis under --strict, 3 I/O failure.
int run(int argc, const char* const* argv);

}  // namespace ums::cli
