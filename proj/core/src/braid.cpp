#include "braidinv/braid.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "braidinv/errors.hpp"

namespace braidinv {

namespace {

void check_index(int index, int strands) {
    if (index < 1 || index >= strands)
        throw std::invalid_argument("generator index " + std::to_string(index) +
                                    " out of range for " + std::to_string(strands) +
                                    " strands");
}

// Shared tokenizer for the braid grammars. Returns (token, offset) pairs.
std::vector<std::pair<std::string, std::size_t>> tokenize(const std::string& text) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        out.emplace_back(text.substr(start, i - start), start);
    }
    return out;
}

int parse_strand_header(const std::vector<std::pair<std::string, std::size_t>>& tokens,
                        const std::string& text) {
    if (tokens.empty()) throw ParseError("missing strand header 'n=<int>;'", 0);
    const auto& [tok, pos] = tokens.front();
    if (tok.size() < 4 || tok.substr(0, 2) != "n=" || tok.back() != ';')
        throw ParseError("expected strand header 'n=<int>;', got '" + tok + "'", pos);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(tok.substr(2, tok.size() - 3), &used);
        if (used != tok.size() - 3) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError("malformed strand count in '" + tok + "'", pos);
    }
    if (n < 1) throw ParseError("strand count must be positive", pos);
    (void)text;
    return n;
}

// Parses "s<k>" / "s<k>^-1" / "d<k>". The d form is only legal when
// allow_double is set.
std::pair<int, Mark> parse_letter_token(const std::string& tok, std::size_t pos,
                                        bool allow_double) {
    if (tok.empty()) throw ParseError("empty token", pos);
    char kind = tok[0];
    if (kind != 's' && (!allow_double || kind != 'd'))
        throw ParseError("malformed token '" + tok + "'", pos);
    std::size_t cut = tok.find('^');
    std::string digits = tok.substr(1, cut == std::string::npos ? cut : cut - 1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("malformed token '" + tok + "'", pos);
    int index = 0;
    try {
        index = std::stoi(digits);
    } catch (const std::exception&) {
        throw ParseError("malformed token '" + tok + "'", pos);
    }
    Mark mark = kind == 'd' ? Mark::Double : Mark::Over;
    if (cut != std::string::npos) {
        if (kind == 'd' || tok.substr(cut) != "^-1")
            throw ParseError("malformed token '" + tok + "'", pos);
        mark = Mark::Under;
    }
    return {index, mark};
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<BraidLetter> ls) : strands(n), letters(std::move(ls)) {
    for (const auto& l : letters) check_index(l.index, strands);
}

SingularBraidWord::SingularBraidWord(int n, std::vector<SingularLetter> ls)
    : strands(n), letters(std::move(ls)) {
    for (const auto& l : letters) check_index(l.index, strands);
}

int SingularBraidWord::double_point_count() const {
    int c = 0;
    for (const auto& l : letters)
        if (l.mark == Mark::Double) ++c;
    return c;
}

BraidWord SingularBraidWord::resolve_over() const {
    BraidWord b(strands);
    for (const auto& l : letters)
        b.letters.push_back({l.index, l.mark == Mark::Under ? -1 : +1});
    return b;
}

BraidWord parse_braid(const std::string& text) {
    auto tokens = tokenize(text);
    int n = parse_strand_header(tokens, text);
    BraidWord b(n);
    for (std::size_t t = 1; t < tokens.size(); ++t) {
        auto [index, mark] = parse_letter_token(tokens[t].first, tokens[t].second, false);
        if (index < 1 || index >= n)
            throw ParseError("generator index out of range in '" + tokens[t].first + "'",
                             tokens[t].second);
        b.letters.push_back({index, mark == Mark::Under ? -1 : +1});
    }
    return b;
}

SingularBraidWord parse_singular_braid(const std::string& text) {
    auto tokens = tokenize(text);
    int n = parse_strand_header(tokens, text);
    SingularBraidWord s(n);
    for (std::size_t t = 1; t < tokens.size(); ++t) {
        auto [index, mark] = parse_letter_token(tokens[t].first, tokens[t].second, true);
        if (index < 1 || index >= n)
            throw ParseError("generator index out of range in '" + tokens[t].first + "'",
                             tokens[t].second);
        s.letters.push_back({index, mark});
    }
    return s;
}

std::string to_string(const BraidWord& b) {
    std::string s = "n=" + std::to_string(b.strands) + ";";
    for (const auto& l : b.letters) {
        s += " s" + std::to_string(l.index);
        if (l.sign < 0) s += "^-1";
    }
    return s;
}

std::string to_string(const SingularBraidWord& w) {
    std::string s = "n=" + std::to_string(w.strands) + ";";
    for (const auto& l : w.letters) {
        s += ' ';
        s += l.mark == Mark::Double ? 'd' : 's';
        s += std::to_string(l.index);
        if (l.mark == Mark::Under) s += "^-1";
    }
    return s;
}

std::string to_string(const CombedForm& c) {
    std::string s;
    for (int nu = 2; nu <= c.strands; ++nu) {
        if (nu > 2) s += '\n';
        s += "nu=" + std::to_string(nu) + ":";
        for (int letter : c.layer(nu)) {
            s += " A(" + std::to_string(letter > 0 ? letter : -letter) + "," +
                 std::to_string(nu) + ")^" + (letter > 0 ? "1" : "-1");
        }
    }
    return s;
}

Permutation underlying_permutation(const BraidWord& b) {
    std::vector<int> images(static_cast<std::size_t>(b.strands));
    for (int p = 1; p <= b.strands; ++p) {
        int pos = p;
        for (const auto& l : b.letters) {
            if (pos == l.index)
                pos = l.index + 1;
            else if (pos == l.index + 1)
                pos = l.index;
        }
        images[p - 1] = pos;
    }
    return Permutation(images);
}

bool is_pure(const BraidWord& b) { return underlying_permutation(b).is_identity(); }

BraidWord pure_generator(int i, int j, int n) {
    if (i < 1 || i >= j || j > n)
        throw std::invalid_argument("pure generator requires 1 <= i < j <= n");
    BraidWord b(n);
    for (int k = j - 1; k > i; --k) b.letters.push_back({k, +1});
    b.letters.push_back({i, +1});
    b.letters.push_back({i, +1});
    for (int k = i + 1; k <= j - 1; ++k) b.letters.push_back({k, -1});
    return b;
}

BraidWord PureGeneratorWord::to_braid() const {
    BraidWord out(strands);
    for (const auto& l : letters) {
        BraidWord g = pure_generator(l.i, l.j, strands);
        if (l.sign < 0) g = invert(g);
        out.letters.insert(out.letters.end(), g.letters.begin(), g.letters.end());
    }
    return out;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
    BraidWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

BraidWord invert(const BraidWord& a) {
    BraidWord r(a.strands);
    r.letters.reserve(a.letters.size());
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
        r.letters.push_back({it->index, -it->sign});
    return r;
}

namespace {

void free_reduce_letters(std::vector<BraidLetter>& w) {
    std::vector<BraidLetter> out;
    out.reserve(w.size());
    for (const auto& l : w) {
        if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    w = std::move(out);
}

// Finds the handle with the smallest closing position: the first q such that
// some p < q has w[p] = sigma_i^e, w[q] = sigma_i^-e with no sigma_i or
// sigma_{j<i} in between. Because q is minimal, the interior contains no
// complete handle, so the handle is permitted.
bool find_first_handle(const std::vector<BraidLetter>& w, std::size_t& p_out,
                       std::size_t& q_out) {
    for (std::size_t q = 1; q < w.size(); ++q) {
        const int i = w[q].index;
        for (std::size_t p = q; p-- > 0;) {
            if (w[p].index > i) continue;
            if (w[p].index < i) break;
            if (w[p].sign == -w[q].sign) {
                p_out = p;
                q_out = q;
                return true;
            }
            break;  // same sign blocks any earlier match for this q
        }
    }
    return false;
}

std::vector<BraidLetter> reduce_handle(const std::vector<BraidLetter>& w, std::size_t p,
                                       std::size_t q) {
    const int i = w[p].index;
    const int e = w[p].sign;
    std::vector<BraidLetter> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    for (std::size_t t = p + 1; t < q; ++t) {
        if (w[t].index == i + 1) {
            out.push_back({i + 1, -e});
            out.push_back({i, w[t].sign});
            out.push_back({i + 1, e});
        } else {
            out.push_back(w[t]);
        }
    }
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(q) + 1, w.end());
    return out;
}

}  // namespace

bool is_trivial(const BraidWord& b, std::int64_t step_budget) {
    std::vector<BraidLetter> w = b.letters;
    free_reduce_letters(w);
    std::int64_t steps = 0;
    std::size_t p = 0, q = 0;
    while (find_first_handle(w, p, q)) {
        if (++steps > step_budget)
            throw BudgetError("handle reduction exceeded its step budget");
        w = reduce_handle(w, p, q);
        free_reduce_letters(w);
    }
    return w.empty();
}

bool braids_equal(const BraidWord& a, const BraidWord& b, std::int64_t step_budget) {
    if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
    return is_trivial(compose(a, invert(b)), step_budget);
}

BraidWord remove_strand(const BraidWord& b, int k) {
    if (!is_pure(b)) throw std::invalid_argument("remove_strand requires a pure braid");
    if (k < 1 || k > b.strands) throw std::invalid_argument("strand position out of range");
    BraidWord out(b.strands - 1);
    int pos = k;  // current geometric position of the deleted strand
    for (const auto& l : b.letters) {
        if (l.index == pos) {
            pos = l.index + 1;
        } else if (l.index + 1 == pos) {
            pos = l.index;
        } else {
            out.letters.push_back({l.index > pos ? l.index - 1 : l.index, l.sign});
        }
    }
    return out;
}

namespace detail {

void free_reduce(std::vector<int>& word) {
    std::vector<int> out;
    out.reserve(word.size());
    for (int g : word) {
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    }
    word = std::move(out);
}

std::vector<int> artin_apply(const BraidLetter& letter, const std::vector<int>& word) {
    const int k = letter.index;
    std::vector<int> out;
    out.reserve(word.size() * 3);
    auto emit = [&out](std::initializer_list<int> gs) {
        for (int g : gs) {
            if (!out.empty() && out.back() == -g)
                out.pop_back();
            else
                out.push_back(g);
        }
    };
    for (int g : word) {
        int a = g > 0 ? g : -g;
        if (letter.sign > 0) {
            if (a == k)
                g > 0 ? emit({k, k + 1, -k}) : emit({k, -(k + 1), -k});
            else if (a == k + 1)
                emit({g > 0 ? k : -k});
            else
                emit({g});
        } else {
            if (a == k)
                emit({g > 0 ? k + 1 : -(k + 1)});
            else if (a == k + 1)
                g > 0 ? emit({-(k + 1), k, k + 1}) : emit({-(k + 1), -k, k + 1});
            else
                emit({g});
        }
    }
    return out;
}

}  // namespace detail

namespace {

// Reads the kernel part of a one-moving-strand pure braid as a free word in
// the loops A_{i nu}. The Artin action of the kernel element sends x_nu to
// W x_nu W^-1; deleting the x_nu letters of the conjugator W yields the loop
// word in x_1..x_{nu-1}. Validated against the word problem oracle by the
// round-trip tests.
std::vector<int> kernel_loop_word(const BraidWord& kappa) {
    const int nu = kappa.strands;
    std::vector<int> u{nu};
    for (const auto& l : kappa.letters) u = detail::artin_apply(l, u);
    detail::free_reduce(u);
    if (u.size() % 2 == 0 || u[u.size() / 2] != nu)
        throw std::invalid_argument("braid is not in the combing kernel");
    std::vector<int> w(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(u.size() / 2));
    std::erase_if(w, [nu](int g) { return g == nu || g == -nu; });
    detail::free_reduce(w);
    return w;
}

}  // namespace

CombedForm comb(const BraidWord& b) {
    if (!is_pure(b)) throw std::invalid_argument("comb requires a pure braid");
    CombedForm form(b.strands);
    BraidWord cur = b;
    for (int nu = b.strands; nu >= 2; --nu) {
        BraidWord rest = remove_strand(cur, nu);
        // Kernel part of cur under remove_strand(., nu), split at the bottom:
        // cur = kappa * (rest with a trivial strand nu appended).
        BraidWord lifted(nu);
        lifted.letters = rest.letters;
        BraidWord kappa = compose(cur, invert(lifted));
        form.layers[static_cast<std::size_t>(nu) - 2] = kernel_loop_word(kappa);
        cur = rest;
    }
    return form;
}

bool CombedForm::all_empty() const {
    return std::all_of(layers.begin(), layers.end(),
                       [](const std::vector<int>& l) { return l.empty(); });
}

BraidWord CombedForm::to_braid() const {
    BraidWord out(strands);
    for (int nu = strands; nu >= 2; --nu) {
        for (int letter : layer(nu)) {
            BraidWord g = pure_generator(letter > 0 ? letter : -letter, nu, strands);
            if (letter < 0) g = invert(g);
            out.letters.insert(out.letters.end(), g.letters.begin(), g.letters.end());
        }
    }
    return out;
}

bool combed_equal(const CombedForm& a, const CombedForm& b) {
    return a.strands == b.strands && a.layers == b.layers;
}

ChordDiagram chord_diagram_of_singular(const SingularBraidWord& s) {
    if (!is_pure(s.resolve_over()))
        throw std::invalid_argument("singular word does not resolve to a pure braid");
    // position -> starting strand
    std::vector<int> strand_at(static_cast<std::size_t>(s.strands));
    for (int p = 0; p < s.strands; ++p) strand_at[static_cast<std::size_t>(p)] = p + 1;
    ChordDiagram d(s.strands);
    for (const auto& l : s.letters) {
        if (l.mark == Mark::Double)
            d.chords.emplace_back(strand_at[static_cast<std::size_t>(l.index) - 1],
                                  strand_at[static_cast<std::size_t>(l.index)]);
        std::swap(strand_at[static_cast<std::size_t>(l.index) - 1],
                  strand_at[static_cast<std::size_t>(l.index)]);
    }
    return d;
}

}  // namespace braidinv
