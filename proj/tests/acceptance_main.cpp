#include <iostream>

#include "nerveforge/acceptance.h"

int main() {
    int failed = nerveforge::run_acceptance(std::cout);
    return failed == 0 ? 0 : 1;
}
