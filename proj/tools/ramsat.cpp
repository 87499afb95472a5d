#include "ramsat/cli.hpp"

int main(int argc, char** argv) { return ramsat::run(argc, argv); }
