#include <string>
#include <vector>

#include "rpl/cli.hpp"

int main(int argc, char** argv) {
    return rpl::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
