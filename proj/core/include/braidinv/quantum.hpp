#ifndef BRAIDINV_QUANTUM_HPP
#define BRAIDINV_QUANTUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "braidinv/braid.hpp"
#include "braidinv/permutation.hpp"
#include "braidinv/series.hpp"

namespace braidinv {

inline constexpr int kDefaultTruncationOrder = 4;
inline constexpr int kDefaultMaxDimension = 81;  // N^n guard, 3^4 by default

// Square matrix of truncated series; the dimension is N^n for n tensor
// factors of the N-dimensional defining representation.
class SeriesMatrix {
public:
    SeriesMatrix() = default;
    SeriesMatrix(int dim, int order);

    static SeriesMatrix identity(int dim, int order);

    int dim() const { return dim_; }
    int order() const { return order_; }

    TruncatedSeries& at(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    const TruncatedSeries& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * dim_ + c];
    }

    bool is_zero() const;

    friend SeriesMatrix operator+(const SeriesMatrix& x, const SeriesMatrix& y);
    friend SeriesMatrix operator-(const SeriesMatrix& x, const SeriesMatrix& y);
    friend SeriesMatrix operator*(const SeriesMatrix& x, const SeriesMatrix& y);
    friend bool operator==(const SeriesMatrix& x, const SeriesMatrix& y);

private:
    int dim_ = 0;
    int order_ = 0;
    std::vector<TruncatedSeries> a_;
};

// Braiding operator R-hat on the square of the defining representation of
// gl(N) at q = e^hbar, truncated at order M. Contract: reduces to the flip
// at hbar = 0, satisfies the braid relation and the Hecke skein relation
// R-hat - R-hat^-1 = (q - q^-1) id exactly to order M, and is invertible.
SeriesMatrix r_matrix(int N, int M);
SeriesMatrix r_matrix_inverse(int N, int M);

// Embeds a two-site operator at tensor positions (slot, slot+1) of n factors.
SeriesMatrix local_operator(const SeriesMatrix& two_site, int N, int n, int slot);

// Product, in word order, of the braiding at positions (index, index+1).
SeriesMatrix quantum_invariant(const BraidWord& b, int N, int M,
                               int max_dimension = kDefaultMaxDimension);

// Extension to singular words: a double point contributes
// R-hat - R-hat^-1 at its position. With s0 double points every entry is
// divisible by hbar^s0.
SeriesMatrix quantum_invariant_singular(const SingularBraidWord& s, int N, int M,
                                        int max_dimension = kDefaultMaxDimension);

// tr(sigma o E) where sigma acts by permuting the tensor factors.
TruncatedSeries trace_sigma(const SeriesMatrix& E, const Permutation& sigma, int N);

// Global scale relating quantum traces of singular braids to gl(N) weight
// systems: the hbar^m coefficient of tr_(sigma pi) J(s) equals
// kQuantumWeightScale^m * W_sigma(D)(N). Measured once on the degree-1 case
// (q - q^-1 = 2 hbar + O(hbar^3)) and frozen.
inline constexpr std::int64_t kQuantumWeightScale = 2;

// Checks the identity above for a singular word with m double points and
// pure all-over resolution; the strand correction pi is computed from the
// word's strand tracking.
bool weight_consistency(const SingularBraidWord& s, const Permutation& sigma, int N,
                        int M, int max_dimension = kDefaultMaxDimension);

struct SeparationReport {
    bool separated = false;
    int degree = -1;
    std::optional<Permutation> sigma;
    Rational lhs;
    Rational rhs;
    bool oracle_equal = false;
    // Set when the oracle says unequal but no trace coefficient differs up
    // to (N, M); larger N or M may still separate the pair.
    bool needs_larger_parameters = false;
};

// Searches degrees m = 0..M and all permutations of n (lexicographic) for
// the first differing trace coefficient of the quantum invariants of two
// pure braids, and cross-checks against the word problem oracle.
SeparationReport separate_braids(const BraidWord& a, const BraidWord& b, int N, int M,
                                 int max_dimension = kDefaultMaxDimension);

std::string to_string(const SeparationReport& r);

}  // namespace braidinv

#endif
