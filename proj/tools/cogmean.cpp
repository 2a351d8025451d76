#include "cogmean/cli.hpp"

int main(int argc, char** argv) { return cogmean::cli::run(argc, argv); }
