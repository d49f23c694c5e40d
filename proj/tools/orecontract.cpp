#include "orecontract/cli.hpp"

int main(int argc, char **argv) { return oc::run(argc, argv); }
