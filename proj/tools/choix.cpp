#include <choix/digits.hpp>

#include <iostream>

int main() {
    std::cout << choix::digit_string(16).str() << "\n";
    return 0;
}
