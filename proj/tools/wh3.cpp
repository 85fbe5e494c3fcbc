#include "wh3/cli.hpp"

int main(int argc, char** argv) { return wh3::cli::run(argc, argv); }
