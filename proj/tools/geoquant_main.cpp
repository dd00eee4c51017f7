#include "geoquant/cli_app.hpp"

int main(int argc, char** argv) { return geoquant::run_cli(argc, argv); }
