#include "../src/cli/commands.hpp"

int main(int argc, char** argv) { return nuspectra::cli::run(argc, argv); }
