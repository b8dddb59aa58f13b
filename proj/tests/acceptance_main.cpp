#include <iostream>

#include "blockforge/acceptance.hpp"

int main()
{
    return blockforge::run_acceptance(std::cout) ? 0 : 1;
}
