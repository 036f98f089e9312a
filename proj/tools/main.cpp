// SPDX-License-Identifier: Apache-2.0

#include "agsq/cli.hpp"

int main(int argc, char** argv) { return agsq::cli_main(argc, argv); }
