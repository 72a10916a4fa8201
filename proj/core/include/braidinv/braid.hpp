#ifndef BRAIDINV_BRAID_HPP
#define BRAIDINV_BRAID_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "braidinv/chords.hpp"
#include "braidinv/permutation.hpp"

namespace braidinv {

// Artin generator letter: sigma_index^sign. Conventions used throughout:
// words read bottom to top, generator sigma_k crosses the strand at position
// k over the strand at position k+1, composition is left-to-right
// concatenation.
struct BraidLetter {
    int index = 0;
    int sign = +1;

    friend bool operator==(const BraidLetter& a, const BraidLetter& b) {
        return a.index == b.index && a.sign == b.sign;
    }
};

struct BraidWord {
    int strands = 0;
    std::vector<BraidLetter> letters;

    BraidWord() = default;
    explicit BraidWord(int n) : strands(n) {}
    BraidWord(int n, std::vector<BraidLetter> ls);

    int length() const { return static_cast<int>(letters.size()); }

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strands == b.strands && a.letters == b.letters;
    }
};

enum class Mark { Over, Under, Double };

struct SingularLetter {
    int index = 0;
    Mark mark = Mark::Over;
};

struct SingularBraidWord {
    int strands = 0;
    std::vector<SingularLetter> letters;

    SingularBraidWord() = default;
    explicit SingularBraidWord(int n) : strands(n) {}
    SingularBraidWord(int n, std::vector<SingularLetter> ls);

    int double_point_count() const;
    // Every double point resolved to an overcrossing.
    BraidWord resolve_over() const;
};

// Word in the standard pure braid generators A_{ij} (1 <= i < j <= n) with
// exponents +-1.
struct PureLetter {
    int i = 0;
    int j = 0;
    int sign = +1;
};

struct PureGeneratorWord {
    int strands = 0;
    std::vector<PureLetter> letters;

    PureGeneratorWord() = default;
    explicit PureGeneratorWord(int n) : strands(n) {}

    BraidWord to_braid() const;
};

// Combed normal form: layer nu (2 <= nu <= n) is a freely reduced word in
// the generators A_{i nu}, i < nu, encoded as signed letters +-i.
struct CombedForm {
    int strands = 0;
    std::vector<std::vector<int>> layers;  // layers[nu - 2]

    CombedForm() = default;
    explicit CombedForm(int n) : strands(n), layers(n >= 2 ? n - 1 : 0) {}

    const std::vector<int>& layer(int nu) const { return layers[static_cast<std::size_t>(nu) - 2]; }
    bool all_empty() const;

    // Expands every layer through pure_generator and concatenates the layers
    // for nu = n down to 2 (layer n at the bottom).
    BraidWord to_braid() const;
};

// Text grammar: header "n=<int>;" then whitespace-separated tokens
// "s<k>" / "s<k>^-1" (and "d<k>" for singular words).
BraidWord parse_braid(const std::string& text);
SingularBraidWord parse_singular_braid(const std::string& text);
std::string to_string(const BraidWord& b);
std::string to_string(const SingularBraidWord& s);
std::string to_string(const CombedForm& c);

// Composition of the strand transpositions of each letter in word order:
// the strand starting at position p ends at position perm(p).
Permutation underlying_permutation(const BraidWord& b);
bool is_pure(const BraidWord& b);

// The Artin word (s_{j-1}...s_{i+1}) s_i^2 (s_{i+1}^-1...s_{j-1}^-1) for the
// pure braid generator A_{ij}, 1 <= i < j <= n.
BraidWord pure_generator(int i, int j, int n);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);

// Exact word problem via Dehornoy handle reduction: repeatedly replaces the
// first-closing sigma_i handle sigma_i^e u sigma_i^-e (u free of sigma_i and
// of all sigma_j with j < i) until no handle remains. A word represents the
// identity braid iff its reduction is empty. step_budget caps the number of
// reduction steps and throws BudgetError when exceeded.
bool is_trivial(const BraidWord& b, std::int64_t step_budget = 10'000'000);
bool braids_equal(const BraidWord& a, const BraidWord& b,
                  std::int64_t step_budget = 10'000'000);

// Deletes the strand that starts (and by purity ends) at position k,
// tracking its geometric position through the word. A group homomorphism on
// pure braids.
BraidWord remove_strand(const BraidWord& b, int k);

// Combed normal form of a pure braid. Layers are peeled for nu = n down to
// 2: the layer word is the kernel part of the current braid under
// remove_strand(. , nu), expressed as a free word in the A_{i nu} by reading
// the Artin action of the kernel on the free group of the nu-punctured disk.
CombedForm comb(const BraidWord& b);

bool combed_equal(const CombedForm& a, const CombedForm& b);

// Chord diagram of a singular braid whose all-over resolution is pure: for
// each double point, in word order, the chord joins the starting positions
// of the two strands meeting there.
ChordDiagram chord_diagram_of_singular(const SingularBraidWord& s);

namespace detail {
// Free group utilities shared by the combing reader; letters are +-g for the
// generator x_g.
void free_reduce(std::vector<int>& word);
// Substitution action of a single braid generator on a free word:
// sigma_k maps x_k -> x_k x_{k+1} x_k^-1 and x_{k+1} -> x_k.
std::vector<int> artin_apply(const BraidLetter& letter, const std::vector<int>& word);
}  // namespace detail

}  // namespace braidinv

#endif
