// Regenerates data/golden.json from the in-source reference builders.

#include <fstream>
#include <iostream>

#include "gaudin/golden.hpp"

int main(int argc, char** argv) {
    std::string path = argc > 1 ? argv[1] : "data/golden.json";
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot open " << path << " for writing\n";
        return 2;
    }
    out << gaudin::golden_json();
    std::cout << "wrote " << path << " (" << gaudin::golden_tags().size() << " states)\n";
    return 0;
}
