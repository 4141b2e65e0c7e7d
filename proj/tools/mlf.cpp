#include <iostream>

int main() {
    std::cout << "mlf: placeholder\n";
    return 0;
}
