#include "qescal_cli.hpp"

int main(int argc, char** argv) { return qescal::cli::run(argc, argv); }
