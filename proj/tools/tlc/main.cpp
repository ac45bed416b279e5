#include "tlc/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    tlc::cli::Io io{std::cout, std::cerr, tlc::cli::color_from_environment()};
    return tlc::cli::run(argc, argv, io);
}
