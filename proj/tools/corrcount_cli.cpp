#include "corrcount/io.hpp"

int main(int argc, char** argv) { return corrcount::io::run_cli(argc, argv); }
