#include "slq/cli.hpp"

int main(int argc, char** argv) { return slq::cli::dispatch(argc, argv); }
