#include "cli.hpp"

int main(int argc, char** argv) { return cograte::cli::run(argc, argv); }
