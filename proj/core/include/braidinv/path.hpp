#ifndef BRAIDINV_PATH_HPP
#define BRAIDINV_PATH_HPP

#include <string>
#include <vector>

namespace braidinv {

// Cyclic word in the letters S_1..S_n, stored as its least rotation.
class ConnectedPath {
public:
    explicit ConnectedPath(std::vector<int> letters);

    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    int max_letter() const;

    friend bool operator==(const ConnectedPath& a, const ConnectedPath& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator<(const ConnectedPath& a, const ConnectedPath& b) {
        if (a.letters_.size() != b.letters_.size())
            return a.letters_.size() < b.letters_.size();
        return a.letters_ < b.letters_;
    }

private:
    std::vector<int> letters_;
};

// Unordered multiset of connected paths, stored sorted.
class Path {
public:
    Path() = default;
    explicit Path(std::vector<ConnectedPath> components);

    const std::vector<ConnectedPath>& components() const { return components_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    int total_letters() const;
    int max_letter() const;

    friend bool operator==(const Path& a, const Path& b) {
        return a.components_ == b.components_;
    }
    friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }

private:
    std::vector<ConnectedPath> components_;
};

// Text format "{S1, S1 S3 S3}": components comma separated, letters space
// separated. Canonical printing uses the stored least rotation and sorted
// multiset order.
Path parse_path(const std::string& text);
std::string to_string(const Path& p);

}  // namespace braidinv

#endif
