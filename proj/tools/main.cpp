#include "rsktraj/cli.hpp"

int main(int argc, char** argv) { return rsktraj::cli::run(argc, argv); }
