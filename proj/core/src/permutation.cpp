#include "braidinv/permutation.hpp"

#include <cctype>

#include "braidinv/errors.hpp"

namespace braidinv {

Permutation parse_permutation(const std::string& text, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i >= text.size()) throw ParseError("unterminated cycle", i);
            if (text[i] == ')') {
                ++i;
                break;
            }
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected integer in cycle", i);
            int v = std::stoi(text.substr(start, i - start));
            if (v < 1 || v > n) throw ParseError("cycle element out of range", start);
            if (used[static_cast<std::size_t>(v) - 1])
                throw ParseError("repeated element in cycles", start);
            used[static_cast<std::size_t>(v) - 1] = true;
            cycle.push_back(v);
        }
        for (std::size_t t = 0; t < cycle.size(); ++t)
            images[static_cast<std::size_t>(cycle[t]) - 1] = cycle[(t + 1) % cycle.size()];
    }
    return Permutation(images);
}

}  // namespace braidinv
