#include "acceptance.hpp"

#include <iostream>

int main(int argc, char** argv) { return skein::acceptance::main(argc, argv, std::cout, std::cerr); }
