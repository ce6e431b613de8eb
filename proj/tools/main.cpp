#include "ufpp/cli.hpp"

int main(int argc, char** argv) { return ufpp::cli::run(argc, argv); }
