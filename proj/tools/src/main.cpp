#include "app.hpp"

int main(int argc, char** argv) { return addtrans::cli::run_app(argc, argv); }
