#include "cli.hpp"

int main(int argc, char** argv) {
  return krein::cli::run(std::vector<std::string>(argv, argv + argc));
}
