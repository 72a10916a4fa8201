#include <doctest.h>

#include <random>
#include <set>

#include "braidinv/chords.hpp"
#include "braidinv/errors.hpp"
#include "braidinv/weights.hpp"

using namespace braidinv;

namespace {

ChordDiagram diagram(const std::string& text) { return parse_diagram(text); }

// Independent numeric oracle: explicit dense operators on (C^N)^(tensor n).
// A chord acts by the operator swapping its two tensor factors, sigma by the
// factor permutation; the weight is the honest matrix trace.
using Mat = std::vector<std::vector<long long>>;

int int_pow(int base, int exp) {
    int r = 1;
    for (int t = 0; t < exp; ++t) r *= base;
    return r;
}

std::vector<int> digits_of(int index, int N, int n) {
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int t = n - 1; t >= 0; --t) {
        d[static_cast<std::size_t>(t)] = index % N;
        index /= N;
    }
    return d;
}

int index_of(const std::vector<int>& digits, int N) {
    int v = 0;
    for (int d : digits) v = v * N + d;
    return v;
}

Mat factor_permutation_matrix(const Permutation& pi, int N) {
    const int n = pi.size();
    const int dim = int_pow(N, n);
    Mat P(static_cast<std::size_t>(dim), std::vector<long long>(static_cast<std::size_t>(dim), 0));
    for (int z = 0; z < dim; ++z) {
        const auto d = digits_of(z, N, n);
        std::vector<int> out(static_cast<std::size_t>(n));
        for (int t = 1; t <= n; ++t) out[static_cast<std::size_t>(pi(t)) - 1] = d[static_cast<std::size_t>(t) - 1];
        P[static_cast<std::size_t>(index_of(out, N))][static_cast<std::size_t>(z)] = 1;
    }
    return P;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    const std::size_t dim = A.size();
    Mat C(dim, std::vector<long long>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < dim; ++k) {
            if (!A[i][k]) continue;
            for (std::size_t j = 0; j < dim; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

long long mat_trace(const Mat& A) {
    long long t = 0;
    for (std::size_t i = 0; i < A.size(); ++i) t += A[i][i];
    return t;
}

long long oracle_weight_sigma(const ChordDiagram& d, const Permutation& sigma, int N) {
    Mat acc = factor_permutation_matrix(sigma, N);
    for (auto it = d.chords.rbegin(); it != d.chords.rend(); ++it)
        acc = mat_mul(acc, factor_permutation_matrix(
                               Permutation::transposition(d.strands, it->low, it->high), N));
    return mat_trace(acc);
}

Path path_of(const std::string& text) { return parse_path(text); }

}  // namespace

TEST_CASE("weight_sigma basics") {
    const Permutation id2(2), id3(3);
    CHECK(weight_sigma(ChordDiagram(3), id3) == NPolynomial::monomial(1, 3));
    CHECK(weight_sigma(diagram("n=2; t(1,2)"), id2) == NPolynomial::monomial(1, 1));
    CHECK(weight_sigma(diagram("n=2; t(1,2) t(1,2)"), id2) == NPolynomial::monomial(1, 2));
    CHECK_THROWS_AS(weight_sigma(ChordDiagram(3), id2), std::invalid_argument);
}

TEST_CASE("weight_sigma agrees with the dense matrix oracle") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        ChordDiagram d(n);
        const int m = static_cast<int>(rng() % 4);
        for (int t = 0; t < m; ++t) {
            int a = 1 + static_cast<int>(rng() % n), b = 1 + static_cast<int>(rng() % n);
            while (b == a) b = 1 + static_cast<int>(rng() % n);
            d.chords.emplace_back(a, b);
        }
        for (const auto& sigma : all_permutations(n))
            for (int N = 2; N <= 3; ++N)
                CHECK(weight_sigma(d, sigma).evaluate(N) == oracle_weight_sigma(d, sigma, N));
    }
}

TEST_CASE("pair_to_path reproduces the bundled trace example") {
    const CablingSpec spec({2, 0, 2});
    const Permutation sigma(std::vector<int>{1, 3, 4, 2});  // (1)(2 3 4)
    CHECK(to_string(pair_to_path(spec, sigma)) == "{S1, S1 S3 S3}");
    CHECK(to_string(pair_to_path(CablingSpec({1, 1, 1}), Permutation(3))) == "{S1, S2, S3}");
    CHECK_THROWS_AS(pair_to_path(spec, Permutation(3)), std::invalid_argument);
}

TEST_CASE("path to pair round trips on all small paths") {
    // All canonical paths with up to 5 letters over up to 4 strands.
    for (int n = 2; n <= 4; ++n) {
        std::set<std::vector<int>> words;
        std::vector<std::vector<int>> stack{{}};
        while (!stack.empty()) {
            auto w = stack.back();
            stack.pop_back();
            if (!w.empty()) words.insert(ConnectedPath(w).letters());
            if (w.size() < 4)
                for (int l = 1; l <= n; ++l) {
                    auto v = w;
                    v.push_back(l);
                    stack.push_back(v);
                }
        }
        std::vector<std::vector<int>> comps(words.begin(), words.end());
        std::vector<Path> paths;
        std::vector<std::size_t> chosen;
        auto build = [&](auto&& self, std::size_t start, int left) -> void {
            if (!chosen.empty()) {
                std::vector<ConnectedPath> cs;
                for (auto i : chosen) cs.push_back(ConnectedPath(comps[i]));
                paths.push_back(Path(std::move(cs)));
            }
            for (std::size_t i = start; i < comps.size(); ++i) {
                if (static_cast<int>(comps[i].size()) > left) continue;
                chosen.push_back(i);
                self(self, i, left - static_cast<int>(comps[i].size()));
                chosen.pop_back();
            }
        };
        build(build, 0, 5);
        for (const auto& p : paths) {
            const auto [spec, sigma] = path_to_pair(p);
            CHECK(pair_to_path(spec, sigma) == p);
            CHECK(spec.total() == p.total_letters());
        }
    }
}

TEST_CASE("weight_cabled basics") {
    const auto d = diagram("n=2; t(1,2)");
    CHECK(weight_cabled(d, CablingSpec({1, 1}), Permutation(2)) ==
          weight_sigma(d, Permutation(2)));
    // four liftings, each a single transposition on four strands: 4 N^3
    CHECK(weight_cabled(d, CablingSpec({2, 2}), Permutation(4)) ==
          NPolynomial::monomial(4, 3));
    CHECK(weight_cabled(d, CablingSpec({0, 2}), Permutation(2)).is_zero());
    CHECK_THROWS_AS(weight_cabled(d, CablingSpec({2, 2}), Permutation(3)),
                    std::invalid_argument);
}

TEST_CASE("weight_cabled is invariant under bundle-wise conjugation") {
    const auto d = diagram("n=3; t(1,2) t(2,3)");
    const CablingSpec spec({2, 1, 2});
    for (const auto& sigma : all_permutations(5)) {
        // pi permutes within bundles {1,2} and {4,5}
        for (const auto& pi_images : {std::vector<int>{2, 1, 3, 4, 5},
                                      std::vector<int>{1, 2, 3, 5, 4},
                                      std::vector<int>{2, 1, 3, 5, 4}}) {
            const Permutation pi(pi_images);
            const Permutation conj = pi * sigma * pi.inverse();
            CHECK(weight_cabled(d, spec, sigma) == weight_cabled(d, spec, conj));
        }
    }
}

TEST_CASE("weight_path on the published lifting examples") {
    const Path p = path_of("{S1, S1 S3 S3}");
    // t13 t13 has 16 liftings
    int liftings = 0;
    for_each_lifting(diagram("n=3; t(1,3) t(1,3)"), p,
                     [&](const Lifting&) { ++liftings; });
    CHECK(liftings == 16);
    // t13 t23 has none: the path never visits strand 2
    CHECK(weight_path(diagram("n=3; t(1,3) t(2,3)"), p).is_zero());
    // empty diagram: one closed loop per component
    CHECK(weight_path(ChordDiagram(3), p) == NPolynomial::monomial(1, 2));
    CHECK(weight_path(ChordDiagram(3), path_of("{S1, S2, S3}")) == NPolynomial::monomial(1, 3));
    CHECK_THROWS_AS(weight_path(ChordDiagram(2), p), std::invalid_argument);
}

TEST_CASE("weight_path equals weight_cabled over path_to_pair") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        ChordDiagram d(n);
        const int m = static_cast<int>(rng() % 4);
        for (int t = 0; t < m; ++t) {
            int a = 1 + static_cast<int>(rng() % n), b = 1 + static_cast<int>(rng() % n);
            while (b == a) b = 1 + static_cast<int>(rng() % n);
            d.chords.emplace_back(a, b);
        }
        std::vector<ConnectedPath> comps;
        const int pieces = 1 + static_cast<int>(rng() % 3);
        for (int c = 0; c < pieces; ++c) {
            std::vector<int> letters;
            const int len = 1 + static_cast<int>(rng() % 3);
            for (int l = 0; l < len; ++l) letters.push_back(1 + static_cast<int>(rng() % n));
            comps.push_back(ConnectedPath(letters));
        }
        const Path p(comps);
        const auto [spec, sigma] = path_to_pair(p, n);
        CHECK(weight_path(d, p) == weight_cabled(d, spec, sigma));
    }
}

TEST_CASE("component counts are bounded by degree plus components") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        ChordDiagram d(n);
        const int m = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < m; ++t) {
            int a = 1 + static_cast<int>(rng() % n), b = 1 + static_cast<int>(rng() % n);
            while (b == a) b = 1 + static_cast<int>(rng() % n);
            d.chords.emplace_back(a, b);
        }
        std::vector<ConnectedPath> comps;
        const int pieces = 1 + static_cast<int>(rng() % 2);
        for (int c = 0; c < pieces; ++c) {
            std::vector<int> letters;
            const int len = 1 + static_cast<int>(rng() % 3);
            for (int l = 0; l < len; ++l) letters.push_back(1 + static_cast<int>(rng() % n));
            comps.push_back(ConnectedPath(letters));
        }
        const Path p(comps);
        const int r = p.component_count();
        for_each_lifting(d, p, [&](const Lifting& lift) {
            CHECK(lift.component_count <= m + r);
            const bool at_max = lift.component_count == m + r;
            CHECK(at_max == (!lift.has_crossing && !lift.has_connecting));
        });
    }
}

TEST_CASE("coefficient extraction") {
    const NPolynomial p = NPolynomial::monomial(1, 3);
    CHECK(p.coeff(3) == 1);
    CHECK(NPolynomial::monomial(4, 3).coeff(2) == 0);
    CHECK(NPolynomial::monomial(4, 3).coeff(7) == 0);
    CHECK(p.str() == "N^3");
    CHECK(NPolynomial::monomial(4, 3).str() == "4*N^3");
    CHECK(NPolynomial().str() == "0");
}

TEST_CASE("flat separation entries form a Kronecker delta") {
    CHECK(flat_separation_entry(3, {1}, {1}, 3) == 1);
    CHECK(flat_separation_entry(3, {2}, {1}, 3) == 0);
    CHECK(flat_separation_entry(4, {1, 3}, {1, 3}, 4) == 1);
    CHECK(flat_separation_entry(4, {1, 3}, {3, 1}, 4) == 0);
    // the value does not depend on idle extra strands
    CHECK(flat_separation_entry(3, {1, 2}, {1, 2}, 5) == 1);
    CHECK_THROWS_AS(flat_separation_entry(3, {3}, {1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(flat_separation_entry(3, {1, 1}, {1}, 3), std::invalid_argument);
}

TEST_CASE("separation matrix small cases") {
    const SeparationMatrix m0 = separation_matrix(4, 0);
    REQUIRE(m0.basis.size() == 1);
    CHECK(m0.entries[0][0] == 1);
    CHECK(m0.unitriangular);

    const SeparationMatrix m1 = separation_matrix(3, 1);
    REQUIRE(m1.basis.size() == 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(m1.entries[a][b] == (a == b ? 1 : 0));
    CHECK(m1.unitriangular);

    const SeparationMatrix m2 = separation_matrix(3, 2);
    REQUIRE(m2.basis.size() == 7);
    CHECK(m2.unitriangular);
}

TEST_CASE("separation matrix respects its budget") {
    CHECK_THROWS_AS(separation_matrix(3, 2, 100), BudgetError);
    CHECK_THROWS_AS(weight_path(diagram("n=3; t(1,3) t(1,3)"), path_of("{S1, S1 S3 S3}"), 3),
                    BudgetError);
}

TEST_CASE("evaluate_combination is linear and kills the ideal") {
    const auto rel = relation_4t(1, 2, 3, 3);
    for (const auto& d : enumerate_non_decreasing(3, 2))
        CHECK(evaluate_combination(rel, path_of_diagram(d)).is_zero());
    CHECK(evaluate_combination(DiagramCombination(3), path_of("{S1, S2, S3}")).is_zero());

    std::mt19937 rng(35);
    for (int trial = 0; trial < 20; ++trial) {
        DiagramCombination x(3);
        for (int k = 0; k < 2; ++k) {
            ChordDiagram d(3);
            const int m = 2;
            for (int t = 0; t < m; ++t) {
                int a = 1 + static_cast<int>(rng() % 3), b = 1 + static_cast<int>(rng() % 3);
                while (b == a) b = 1 + static_cast<int>(rng() % 3);
                d.chords.emplace_back(a, b);
            }
            x.add_term(d, Rational(1 + static_cast<int>(rng() % 3), 2));
        }
        const auto residue = x - normal_form(x);
        for (const auto& d : enumerate_non_decreasing(3, 2))
            CHECK(evaluate_combination(residue, path_of_diagram(d)).is_zero());
    }
}

TEST_CASE("rational polynomial printing for combination values") {
    DiagramCombination x(2);
    x.add_term(diagram("n=2; t(1,2)"), Rational(1, 2));
    const RationalNPolynomial v = evaluate_combination(x, path_of("{S1 S2}"));
    CHECK(v.str() == "1/2*N^2");
}
