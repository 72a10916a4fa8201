#include <doctest.h>

#include <random>

#include "braidinv/braid.hpp"
#include "braidinv/errors.hpp"

using namespace braidinv;

namespace {

BraidWord word(const std::string& text) { return parse_braid(text); }

BraidWord random_word(std::mt19937& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> index_dist(1, n - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    BraidWord b(n);
    const int len = len_dist(rng);
    for (int t = 0; t < len; ++t)
        b.letters.push_back({index_dist(rng), sign_dist(rng) ? +1 : -1});
    return b;
}

BraidWord random_pure_word(std::mt19937& rng, int n, int max_len) {
    for (;;) {
        BraidWord b = random_word(rng, n, max_len);
        if (is_pure(b)) return b;
    }
}

// Test-only word problem oracle, independent of handle reduction: the Artin
// action on the free group is faithful, so a braid word is trivial iff every
// generator is fixed by the induced automorphism. Letters act here by direct
// textual substitution, processed from the end of the word.
using FreeWord = std::vector<int>;

FreeWord oracle_subst(int index, int sign, const FreeWord& input) {
    FreeWord out;
    auto push = [&out](int g) {
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    };
    auto emit = [&](int g) {
        const int a = g > 0 ? g : -g;
        std::vector<int> img;
        if (sign > 0) {
            if (a == index)
                img = {index, index + 1, -index};
            else if (a == index + 1)
                img = {index};
            else
                img = {a};
        } else {
            if (a == index)
                img = {index + 1};
            else if (a == index + 1)
                img = {-(index + 1), index, index + 1};
            else
                img = {a};
        }
        if (g < 0) {
            for (auto it = img.rbegin(); it != img.rend(); ++it) push(-*it);
        } else {
            for (int x : img) push(x);
        }
    };
    for (int g : input) emit(g);
    return out;
}

bool oracle_trivial(const BraidWord& b) {
    for (int g = 1; g <= b.strands; ++g) {
        FreeWord u{g};
        for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
            u = oracle_subst(it->index, it->sign, u);
        if (u != FreeWord{g}) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parse_braid on the grammar") {
    const BraidWord b = word("n=2; s1 s1");
    CHECK(b.strands == 2);
    REQUIRE(b.letters.size() == 2);
    CHECK(b.letters[0].index == 1);
    CHECK(b.letters[0].sign == 1);

    const BraidWord empty = word("n=3;");
    CHECK(empty.strands == 3);
    CHECK(empty.letters.empty());

    CHECK(word("n=3; s2^-1").letters[0].sign == -1);
    CHECK(to_string(word("n=3; s1 s2^-1")) == "n=3; s1 s2^-1");
}

TEST_CASE("parse_braid errors carry positions") {
    CHECK_THROWS_AS(word("n=3; s5"), ParseError);
    CHECK_THROWS_AS(word("n=3; q1"), ParseError);
    CHECK_THROWS_AS(word("s1 s1"), ParseError);
    CHECK_THROWS_AS(word("n=0;"), ParseError);
    CHECK_THROWS_AS(word("n=2; d1"), ParseError);  // double points need the singular parser
    try {
        word("n=3; s1 q2");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
}

TEST_CASE("underlying permutation and purity") {
    CHECK(underlying_permutation(word("n=3;")).is_identity());
    CHECK(underlying_permutation(word("n=2; s1")) == Permutation::transposition(2, 1, 2));
    CHECK(underlying_permutation(word("n=2; s1 s1")).is_identity());
    CHECK(is_pure(word("n=2; s1 s1")));
    CHECK_FALSE(is_pure(word("n=2; s1")));
    // s1 s2 s1 s2 on 3 strands maps 1 -> 3 -> ... not pure
    CHECK_FALSE(is_pure(word("n=3; s1 s2 s1 s2")));
}

TEST_CASE("underlying permutation is a morphism") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const BraidWord a = random_word(rng, n, 10);
        const BraidWord b = random_word(rng, n, 10);
        CHECK(underlying_permutation(compose(a, b)) ==
              underlying_permutation(b) * underlying_permutation(a));
    }
}

TEST_CASE("pure generator words") {
    CHECK(to_string(pure_generator(1, 2, 2)) == "n=2; s1 s1");
    CHECK(to_string(pure_generator(1, 3, 3)) == "n=3; s2 s1 s1 s2^-1");
    CHECK_THROWS_AS(pure_generator(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(pure_generator(1, 4, 3), std::invalid_argument);
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) CHECK(is_pure(pure_generator(i, j, n)));
}

TEST_CASE("pure generator words expand to Artin words") {
    PureGeneratorWord w(3);
    w.letters.push_back({1, 3, +1});
    w.letters.push_back({1, 2, -1});
    const BraidWord expanded = w.to_braid();
    CHECK(braids_equal(expanded,
                       compose(pure_generator(1, 3, 3), invert(pure_generator(1, 2, 3)))));
    CHECK(is_pure(expanded));
    PureGeneratorWord bad(3);
    bad.letters.push_back({2, 2, +1});
    CHECK_THROWS_AS(bad.to_braid(), std::invalid_argument);
}

TEST_CASE("compose and invert") {
    const BraidWord w = word("n=3; s1 s2^-1");
    CHECK(compose(w, BraidWord(3)) == w);
    CHECK(to_string(invert(w)) == "n=3; s2 s1^-1");
    CHECK(is_trivial(compose(w, invert(w))));
    CHECK_THROWS_AS(compose(word("n=2; s1"), word("n=3; s1")), std::invalid_argument);
}

TEST_CASE("word problem basics") {
    CHECK(is_trivial(word("n=2; s1 s1^-1")));
    CHECK_FALSE(is_trivial(word("n=2; s1 s1")));
    CHECK(is_trivial(word("n=3; s1 s2 s1 s2^-1 s1^-1 s2^-1")));
    CHECK(is_trivial(word("n=4; s1 s3 s1^-1 s3^-1")));  // far commutation
}

TEST_CASE("word problem agrees with the Artin action oracle") {
    std::mt19937 rng(12);
    int trivial_seen = 0;
    for (int t = 0; t < 300; ++t) {
        const int n = 2 + static_cast<int>(rng() % 4);
        BraidWord b = random_word(rng, n, 12);
        if (t % 3 == 0) {
            // Plant a trivial word and bury the cancellation under a braid
            // relation, so free reduction alone cannot finish the job.
            b = compose(b, invert(b));
            if (n >= 3) {
                const int i = 1 + static_cast<int>(rng() % (n - 2));
                const std::vector<BraidLetter> rel = {{i, 1},      {i + 1, 1}, {i, 1},
                                                      {i + 1, -1}, {i, -1},    {i + 1, -1}};
                const std::size_t pos = rng() % (b.letters.size() + 1);
                b.letters.insert(b.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                                 rel.begin(), rel.end());
            }
        }
        const bool got = is_trivial(b);
        CHECK(got == oracle_trivial(b));
        if (got) ++trivial_seen;
    }
    CHECK(trivial_seen >= 100);
}

TEST_CASE("is_trivial kills w w^-1 for 200 random words") {
    std::mt19937 rng(13);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const BraidWord w = random_word(rng, n, 16);
        CHECK(is_trivial(compose(w, invert(w))));
    }
}

TEST_CASE("braids_equal") {
    const BraidWord w = word("n=3; s1 s2^-1 s1");
    CHECK(braids_equal(w, w));
    CHECK_FALSE(braids_equal(word("n=2; s1 s1"), word("n=2; s1^-1 s1^-1")));
    const BraidWord ab = compose(pure_generator(1, 2, 3), pure_generator(1, 3, 3));
    const BraidWord ba = compose(pure_generator(1, 3, 3), pure_generator(1, 2, 3));
    CHECK_FALSE(braids_equal(ab, ba));
    CHECK_THROWS_AS(braids_equal(word("n=2; s1"), word("n=3; s1")), std::invalid_argument);
}

TEST_CASE("remove_strand tracks geometric positions") {
    const BraidWord a13 = pure_generator(1, 3, 3);
    CHECK(to_string(remove_strand(a13, 2)) == "n=2; s1 s1");
    CHECK(remove_strand(a13, 3) == BraidWord(2));
    CHECK(remove_strand(BraidWord(3), 1) == BraidWord(2));
    CHECK_THROWS_AS(remove_strand(word("n=2; s1"), 1), std::invalid_argument);
    CHECK_THROWS_AS(remove_strand(BraidWord(3), 4), std::invalid_argument);
}

TEST_CASE("remove_strand is a homomorphism on pure braids") {
    std::mt19937 rng(14);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const BraidWord a = random_pure_word(rng, n, 8);
        const BraidWord b = random_pure_word(rng, n, 8);
        const int k = 1 + static_cast<int>(rng() % n);
        CHECK(braids_equal(remove_strand(compose(a, b), k),
                           compose(remove_strand(a, k), remove_strand(b, k))));
    }
}

TEST_CASE("comb maps each pure generator to a single layer letter") {
    for (int n = 2; n <= 5; ++n)
        for (int nu = 2; nu <= n; ++nu)
            for (int i = 1; i < nu; ++i) {
                const CombedForm f = comb(pure_generator(i, nu, n));
                for (int layer = 2; layer <= n; ++layer) {
                    if (layer == nu)
                        CHECK(f.layer(layer) == std::vector<int>{i});
                    else
                        CHECK(f.layer(layer).empty());
                }
            }
}

TEST_CASE("comb on the named examples") {
    CHECK(comb(BraidWord(3)).all_empty());

    BraidWord a12_in3 = pure_generator(1, 2, 3);
    CombedForm f = comb(a12_in3);
    CHECK(f.layer(2) == std::vector<int>{1});
    CHECK(f.layer(3).empty());

    const BraidWord b = compose(pure_generator(1, 3, 3), pure_generator(1, 2, 3));
    CombedForm g = comb(b);
    CHECK(g.layer(3) == std::vector<int>{1});
    CHECK(g.layer(2) == std::vector<int>{1});
    CHECK(braids_equal(g.to_braid(), b));

    CHECK_THROWS_AS(comb(word("n=2; s1")), std::invalid_argument);
}

TEST_CASE("combed form printing") {
    const BraidWord b = compose(pure_generator(1, 3, 3), invert(pure_generator(1, 2, 3)));
    CHECK(to_string(comb(b)) == "nu=2: A(1,2)^-1\nnu=3: A(1,3)^1");
    CHECK(to_string(comb(BraidWord(3))) == "nu=2:\nnu=3:");
}

TEST_CASE("combing round trip on random pure words") {
    std::mt19937 rng(15);
    for (int t = 0; t < 100; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const BraidWord b = random_pure_word(rng, n, 12);
        CHECK(braids_equal(comb(b).to_braid(), b));
    }
}

TEST_CASE("combing is constant on equal braids") {
    std::mt19937 rng(16);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    for (int t = 0; t < 60; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const BraidWord b = random_pure_word(rng, n, 10);
        BraidWord b2 = b;
        for (int pairs = 0; pairs < 3; ++pairs) {
            std::uniform_int_distribution<std::size_t> pos_dist(0, b2.letters.size());
            const std::size_t pos = pos_dist(rng);
            const int index = 1 + static_cast<int>(rng() % (n - 1));
            const int sign = sign_dist(rng) ? 1 : -1;
            b2.letters.insert(b2.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                              {BraidLetter{index, sign}, BraidLetter{index, -sign}});
        }
        REQUIRE(braids_equal(b, b2));
        CHECK(combed_equal(comb(b), comb(b2)));
    }
    CHECK(combed_equal(comb(BraidWord(4)), comb(BraidWord(4))));
    CHECK_FALSE(combed_equal(comb(compose(pure_generator(1, 2, 3), pure_generator(1, 3, 3))),
                             comb(compose(pure_generator(1, 3, 3), pure_generator(1, 2, 3)))));
}

TEST_CASE("singular words and their chord diagrams") {
    const SingularBraidWord s = parse_singular_braid("n=2; d1 d1");
    CHECK(s.double_point_count() == 2);
    const ChordDiagram d = chord_diagram_of_singular(s);
    REQUIRE(d.degree() == 2);
    CHECK(d.chords[0] == Chord(1, 2));
    CHECK(d.chords[1] == Chord(1, 2));

    CHECK(chord_diagram_of_singular(parse_singular_braid("n=2; s1 s1")).degree() == 0);
    // A single double point resolves to one crossing, which is not pure.
    CHECK_THROWS_AS(chord_diagram_of_singular(parse_singular_braid("n=2; d1")),
                    std::invalid_argument);
}

TEST_CASE("chord labels use starting positions") {
    // d2 fires while strands 1 and 2 are swapped: the meeting strands start
    // at positions 1 and 3.
    const SingularBraidWord s = parse_singular_braid("n=3; s1 d2 s2^-1 s1^-1");
    REQUIRE(is_pure(s.resolve_over()));
    const ChordDiagram d = chord_diagram_of_singular(s);
    REQUIRE(d.degree() == 1);
    CHECK(d.chords[0] == Chord(1, 3));
}

TEST_CASE("singular words parse and print") {
    const SingularBraidWord s = parse_singular_braid("n=3; s1 d2 s1^-1");
    CHECK(to_string(s) == "n=3; s1 d2 s1^-1");
    CHECK(s.resolve_over() == word("n=3; s1 s2 s1^-1"));
    CHECK_THROWS_AS(parse_singular_braid("n=3; d2^-1"), ParseError);
}
