#ifndef BRAIDINV_WEIGHTS_HPP
#define BRAIDINV_WEIGHTS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "braidinv/chords.hpp"
#include "braidinv/npolynomial.hpp"
#include "braidinv/path.hpp"
#include "braidinv/permutation.hpp"

namespace braidinv {

inline constexpr std::int64_t kDefaultStepBudget = 100'000'000;

// gl(N) weight system of the defining representation with trace sigma:
// each chord acts as the transposition of its endpoints, chords compose
// bottom to top, sigma composes on top; the value is N^(cycle count).
NPolynomial weight_sigma(const ChordDiagram& d, const Permutation& sigma);

// Correspondence between bundle/trace pairs (k, sigma) and paths: each cycle
// of sigma reads off the cyclic word of the bundles owning its points.
// Inverse up to cyclic rotation per component and conjugation of sigma by
// permutations inside the bundles.
Path pair_to_path(const CablingSpec& spec, const Permutation& sigma);
std::pair<CablingSpec, Permutation> path_to_pair(const Path& p, int strands = 0);

// Weight system of tensor powers R^(x k_i): sum of weight_sigma over all
// liftings of the chords into the bundles.
NPolynomial weight_cabled(const ChordDiagram& d, const CablingSpec& spec,
                          const Permutation& sigma,
                          std::int64_t step_budget = kDefaultStepBudget);

// Weight system W_P computed directly by the lifting/bridge algorithm with
// union-find component counting. Agrees with weight_cabled over path_to_pair.
NPolynomial weight_path(const ChordDiagram& d, const Path& p,
                        std::int64_t step_budget = kDefaultStepBudget);

// One lifting of a diagram onto a path, as seen by the enumerator. Sites are
// identified by (component, letter position); chord t occupies site number t
// on each of its two subintervals.
struct Lifting {
    // choice[t] = (subinterval of low endpoint, subinterval of high endpoint),
    // each encoded as (component index, letter position).
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> choice;
    int component_count = 0;      // closed curve components after bridging
    bool has_crossing = false;    // two bridges interleave on a component
    bool has_connecting = false;  // some bridge joins two path components
};

// Enumerates all liftings of d onto p and reports each to fn. weight_path is
// the fold of N^(component_count) over this enumeration.
void for_each_lifting(const ChordDiagram& d, const Path& p,
                      const std::function<void(const Lifting&)>& fn,
                      std::int64_t step_budget = kDefaultStepBudget);

// Linear extension of weight_path to combinations.
RationalNPolynomial evaluate_combination(const DiagramCombination& x, const Path& p,
                                         std::int64_t step_budget = kDefaultStepBudget);

// Separation entry for flat diagrams: the coefficient of N^(m+1) in
// W_P(D) where D = t^{i_1 nu}...t^{i_m nu} and P is the connected path
// S_{j_m}...S_{j_1}S_nu. Equals 1 exactly when the index lists agree.
std::int64_t flat_separation_entry(int nu, const std::vector<int>& i_list,
                                   const std::vector<int>& j_list, int n);

// Matrix of coefficients C_{N,m+n} W_{P(D_a)}(D_b) over the non-decreasing
// basis in `precedes` order; rows index the paths, columns the diagrams.
struct SeparationMatrix {
    std::vector<ChordDiagram> basis;
    std::vector<std::vector<std::int64_t>> entries;
    bool unitriangular = false;
};

SeparationMatrix separation_matrix(int n, int m,
                                   std::int64_t step_budget = kDefaultStepBudget);

}  // namespace braidinv

#endif
