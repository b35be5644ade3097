#include "detloci/cli/cli.hpp"

int main(int argc, char** argv) { return detloci::cli::run(argc, argv); }
