#ifndef BRAIDINV_PERMUTATION_HPP
#define BRAIDINV_PERMUTATION_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidinv {

// Permutation of {1,...,n}, stored as the list of images (1-based).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(int n) : images_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("permutation size must be non-negative");
        std::iota(images_.begin(), images_.end(), 1);
    }

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
                throw std::invalid_argument("permutation images are not a bijection");
            seen[v - 1] = true;
        }
    }

    static Permutation transposition(int n, int a, int b) {
        Permutation p(n);
        if (a < 1 || b < 1 || a > n || b > n)
            throw std::invalid_argument("transposition out of range");
        std::swap(p.images_[a - 1], p.images_[b - 1]);
        return p;
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) != i) return false;
        return true;
    }

    // Function composition: (a*b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
        Permutation r;
        r.images_.resize(a.images_.size());
        for (int i = 1; i <= a.size(); ++i) r.images_[i - 1] = a(b(i));
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(images_.size());
        for (int i = 1; i <= size(); ++i) r.images_[(*this)(i)-1] = i;
        return r;
    }

    int cycle_count() const {
        std::vector<bool> seen(images_.size(), false);
        int c = 0;
        for (int i = 1; i <= size(); ++i) {
            if (seen[i - 1]) continue;
            ++c;
            for (int j = i; !seen[j - 1]; j = (*this)(j)) seen[j - 1] = true;
        }
        return c;
    }

    // Cycles by increasing minimum, each starting at its minimum.
    std::vector<std::vector<int>> cycles() const {
        std::vector<std::vector<int>> out;
        std::vector<bool> seen(images_.size(), false);
        for (int i = 1; i <= size(); ++i) {
            if (seen[i - 1]) continue;
            std::vector<int> cyc;
            for (int j = i; !seen[j - 1]; j = (*this)(j)) {
                seen[j - 1] = true;
                cyc.push_back(j);
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    // "(1)(2 3)" — fixed points included.
    std::string cycle_string() const {
        std::string s;
        for (const auto& cyc : cycles()) {
            s += '(';
            for (std::size_t t = 0; t < cyc.size(); ++t) {
                if (t) s += ' ';
                s += std::to_string(cyc[t]);
            }
            s += ')';
        }
        return s;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    std::vector<int> images_;
};

// All permutations of {1,...,n} in lexicographic image order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Parses cycle notation, e.g. "(1)(2 3 4)". Fixed points may be omitted;
// n gives the total size.
Permutation parse_permutation(const std::string& text, int n);

}  // namespace braidinv

#endif
