#include "cli.hpp"

int main(int argc, char** argv) { return hml::cli::runMain(argc, argv); }
