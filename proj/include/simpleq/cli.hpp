// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#pragma once

namespace simpleq {

// Exit codes: 0 ok, 1 a solve did not converge (or broke down), 2 invalid input.
int run_cli(int argc, const char* const* argv);

} // namespace simpleq
