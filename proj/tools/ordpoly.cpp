#include "ordpoly/cli.hpp"

int main(int argc, char** argv) { return ordpoly::cli::run(argc, argv); }
