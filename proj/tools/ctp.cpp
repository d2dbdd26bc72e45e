#include "ctp/cli.hpp"

int main(int argc, char** argv) { return ctp::cli::dispatch(argc, argv); }
