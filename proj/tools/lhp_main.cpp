#include "lhp/harness.hpp"

int main(int argc, char** argv) { return lhp::harness::cli_main(argc, argv); }
