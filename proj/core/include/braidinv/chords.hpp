#ifndef BRAIDINV_CHORDS_HPP
#define BRAIDINV_CHORDS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidinv/rational.hpp"

namespace braidinv {

class Path;

// Horizontal chord t^{ij} between strands i and j, stored with low < high
// (t^{ij} = t^{ji}).
struct Chord {
    int low = 0;
    int high = 0;

    Chord() = default;
    Chord(int a, int b);

    // The order of a chord is its larger endpoint.
    int order() const { return high; }

    friend bool operator==(const Chord& a, const Chord& b) {
        return a.low == b.low && a.high == b.high;
    }
    friend bool operator!=(const Chord& a, const Chord& b) { return !(a == b); }
    friend bool operator<(const Chord& a, const Chord& b) {
        return a.low != b.low ? a.low < b.low : a.high < b.high;
    }
};

// Chord diagram on n vertical strands; chords listed bottom to top. The
// degree is the number of chords.
struct ChordDiagram {
    int strands = 0;
    std::vector<Chord> chords;

    ChordDiagram() = default;
    explicit ChordDiagram(int n) : strands(n) {}
    ChordDiagram(int n, std::vector<Chord> cs);

    int degree() const { return static_cast<int>(chords.size()); }

    friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
        return a.strands == b.strands && a.chords == b.chords;
    }
    friend bool operator!=(const ChordDiagram& a, const ChordDiagram& b) { return !(a == b); }
};

bool is_flat(const ChordDiagram& d);
bool is_non_decreasing(const ChordDiagram& d);

// Chord counts per order, listed from order n down to order 1 (the order-1
// entry is always 0).
std::vector<int> profile(const ChordDiagram& d);

// Strict total order on diagrams of equal degree and strand count:
// lexicographic on profiles, ties broken lexicographically on the canonical
// chord sequences.
bool precedes(const ChordDiagram& a, const ChordDiagram& b);

// Key order for term maps: degree first, then the `precedes` order extended
// to all diagrams. Canonical and total.
struct DiagramKeyLess {
    bool operator()(const ChordDiagram& a, const ChordDiagram& b) const;
};

// Formal rational linear combination of chord diagrams with a common strand
// count. Zero coefficients are never stored.
class DiagramCombination {
public:
    DiagramCombination() = default;
    explicit DiagramCombination(int strands) : strands_(strands) {}

    static DiagramCombination unit(int strands);
    static DiagramCombination single(const ChordDiagram& d, Rational c = Rational(1));

    int strands() const { return strands_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ChordDiagram, Rational, DiagramKeyLess>& terms() const { return terms_; }

    void add_term(const ChordDiagram& d, const Rational& c);
    Rational coefficient(const ChordDiagram& d) const;

    // True when every term has the same degree (vacuously true for zero).
    bool is_homogeneous() const;

    friend DiagramCombination operator+(const DiagramCombination& a, const DiagramCombination& b);
    friend DiagramCombination operator-(const DiagramCombination& a, const DiagramCombination& b);
    friend DiagramCombination operator*(const Rational& c, const DiagramCombination& x);
    friend bool operator==(const DiagramCombination& a, const DiagramCombination& b) {
        return a.strands_ == b.strands_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const DiagramCombination& a, const DiagramCombination& b) {
        return !(a == b);
    }

private:
    int strands_ = 0;
    std::map<ChordDiagram, Rational, DiagramKeyLess> terms_;
};

// Product of the graded algebra of chord diagrams: bilinear extension of
// stacking (list concatenation); degrees add.
DiagramCombination multiply(const DiagramCombination& a, const DiagramCombination& b);
ChordDiagram concat(const ChordDiagram& a, const ChordDiagram& b);

// Generators of the defining ideal.
// relation_commute: t^{ij}t^{kl} - t^{kl}t^{ij} for four distinct strands.
DiagramCombination relation_commute(int i, int j, int k, int l, int n);
// relation_4t: t^{ik}t^{ij} + t^{jk}t^{ij} - t^{ij}t^{ik} - t^{ij}t^{jk},
// i.e. the commutator [t^{ik}+t^{jk}, t^{ij}] for three distinct strands.
DiagramCombination relation_4t(int i, int j, int k, int n);

// All non-decreasing degree-m diagrams on n strands, sorted by `precedes`.
std::vector<ChordDiagram> enumerate_non_decreasing(int n, int m);

// Coefficient of x^m in the product over nu = 2..n of 1/(1 - (nu-1)x);
// counts the non-decreasing diagrams of degree m on n strands.
std::int64_t hilbert_coefficient(int n, int m);

// Rewrites a combination into the non-decreasing basis modulo the defining
// ideal. Linear, idempotent, degree preserving; fixes basis monomials.
DiagramCombination normal_form(const DiagramCombination& x);
DiagramCombination normal_form(const ChordDiagram& d);

namespace detail {
// Same rewriting rules applied in pseudo-random pair order; used by the
// confluence tests.
DiagramCombination normal_form_randomized(const DiagramCombination& x, std::uint64_t seed);
}  // namespace detail

// Bundle sizes k_1..k_n for the cabling morphism. Offsets l_i (number of
// points before bundle i) and the total are derived.
class CablingSpec {
public:
    explicit CablingSpec(std::vector<int> k);

    int strands() const { return static_cast<int>(k_.size()); }
    int bundle(int i) const { return k_[static_cast<std::size_t>(i) - 1]; }
    int offset(int i) const { return offsets_[static_cast<std::size_t>(i) - 1]; }
    int total() const { return total_; }
    const std::vector<int>& sizes() const { return k_; }

    // 1-based bundle owning point p of 1..total.
    int owner(int p) const;

private:
    std::vector<int> k_;
    std::vector<int> offsets_;
    int total_ = 0;
};

// Algebra morphism replacing strand i by a bundle of k_i strands and summing
// over all liftings of the chords; degree preserving and multiplicative.
DiagramCombination delta_cabling(const CablingSpec& spec, const DiagramCombination& x);

// Path attached to a non-decreasing diagram: the order-nu flat factor
// t^{i_1 nu}...t^{i_m nu} contributes the connected path S_{i_m}...S_{i_1}S_nu,
// and every order nu in 1..n with no chords contributes the singleton S_nu.
Path path_of_diagram(const ChordDiagram& d);

// Text formats: "n=<int>; t(1,3) t(2,3)" for diagrams (empty chord list for
// the unit) and "n=<int>; <rational>*[t(1,2) t(1,3)] + ..." for combinations.
ChordDiagram parse_diagram(const std::string& text);
DiagramCombination parse_combination(const std::string& text);
std::string to_string(const ChordDiagram& d);
std::string to_string(const DiagramCombination& x);

}  // namespace braidinv

#endif
