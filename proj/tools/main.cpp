// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cvdcmap/cli.hpp"

int main(int argc, char** argv) { return cvdcmap::run_cli(argc, argv, std::cout, std::cerr); }
