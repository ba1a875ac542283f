#include "sgdlayout/cli.hpp"

int main(int argc, char** argv) {
    return sgdlayout::cli_main(std::vector<std::string>(argv, argv + argc));
}
