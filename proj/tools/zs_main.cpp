#include "cli_app.hpp"

int main(int argc, char** argv) { return zs::cli::run(argc, argv); }
