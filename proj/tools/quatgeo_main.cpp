#include "quatgeo/cli_app.hpp"

int main(int argc, char** argv) { return quatgeo::run_cli(argc, argv); }
