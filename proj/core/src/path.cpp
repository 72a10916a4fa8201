#include "braidinv/path.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "braidinv/errors.hpp"

namespace braidinv {

namespace {

std::vector<int> least_rotation(std::vector<int> w) {
    std::vector<int> best = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        if (w < best) best = w;
    }
    return best;
}

}  // namespace

ConnectedPath::ConnectedPath(std::vector<int> letters) {
    if (letters.empty()) throw std::invalid_argument("connected path must be nonempty");
    for (int l : letters)
        if (l < 1) throw std::invalid_argument("path letters are positive strand indices");
    letters_ = least_rotation(std::move(letters));
}

int ConnectedPath::max_letter() const {
    return *std::max_element(letters_.begin(), letters_.end());
}

Path::Path(std::vector<ConnectedPath> components) : components_(std::move(components)) {
    std::sort(components_.begin(), components_.end());
}

int Path::total_letters() const {
    int t = 0;
    for (const auto& c : components_) t += c.length();
    return t;
}

int Path::max_letter() const {
    int m = 0;
    for (const auto& c : components_) m = std::max(m, c.max_letter());
    return m;
}

Path parse_path(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '{') throw ParseError("expected '{'", i);
    ++i;
    std::vector<ConnectedPath> components;
    std::vector<int> letters;
    while (true) {
        skip_ws();
        if (i >= text.size()) throw ParseError("unterminated path", i);
        if (text[i] == '}' || text[i] == ',') {
            if (letters.empty()) throw ParseError("empty path component", i);
            components.push_back(ConnectedPath(std::move(letters)));
            letters.clear();
            if (text[i] == '}') {
                ++i;
                break;
            }
            ++i;
            continue;
        }
        if (text[i] != 'S') throw ParseError("expected letter 'S<k>'", i);
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("expected strand number after 'S'", start);
        letters.push_back(std::stoi(text.substr(start, i - start)));
    }
    skip_ws();
    if (i != text.size()) throw ParseError("unexpected input after '}'", i);
    return Path(std::move(components));
}

std::string to_string(const Path& p) {
    std::string s = "{";
    for (std::size_t c = 0; c < p.components().size(); ++c) {
        if (c) s += ", ";
        const auto& letters = p.components()[c].letters();
        for (std::size_t t = 0; t < letters.size(); ++t) {
            if (t) s += ' ';
            s += "S" + std::to_string(letters[t]);
        }
    }
    return s + "}";
}

}  // namespace braidinv
