// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The simpleq authors
#include "simpleq/cli.hpp"

int main(int argc, char** argv) { return simpleq::run_cli(argc, argv); }
