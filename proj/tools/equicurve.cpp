#include "mink/report.hpp"

int main(int argc, char** argv) { return mink::cli_main(argc, argv); }
