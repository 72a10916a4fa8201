#include "braidinv/chords.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <stdexcept>

#include "braidinv/errors.hpp"
#include "braidinv/path.hpp"

namespace braidinv {

Chord::Chord(int a, int b) {
    if (a == b || a < 1 || b < 1) throw std::invalid_argument("chord endpoints must be distinct positive strands");
    low = std::min(a, b);
    high = std::max(a, b);
}

ChordDiagram::ChordDiagram(int n, std::vector<Chord> cs) : strands(n), chords(std::move(cs)) {
    for (const auto& c : chords)
        if (c.high > n) throw std::invalid_argument("chord endpoint exceeds strand count");
}

bool is_flat(const ChordDiagram& d) {
    for (const auto& c : d.chords)
        if (c.order() != d.chords.front().order()) return false;
    return true;
}

bool is_non_decreasing(const ChordDiagram& d) {
    for (std::size_t t = 1; t < d.chords.size(); ++t)
        if (d.chords[t - 1].order() > d.chords[t].order()) return false;
    return true;
}

std::vector<int> profile(const ChordDiagram& d) {
    std::vector<int> counts(static_cast<std::size_t>(d.strands), 0);
    for (const auto& c : d.chords) ++counts[static_cast<std::size_t>(c.order()) - 1];
    std::reverse(counts.begin(), counts.end());
    return counts;
}

bool precedes(const ChordDiagram& a, const ChordDiagram& b) {
    if (a.strands != b.strands || a.degree() != b.degree())
        throw std::invalid_argument("precedes requires equal degree and strand count");
    const auto pa = profile(a), pb = profile(b);
    if (pa != pb) return pa < pb;
    return a.chords < b.chords;
}

bool DiagramKeyLess::operator()(const ChordDiagram& a, const ChordDiagram& b) const {
    if (a.strands != b.strands) return a.strands < b.strands;
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const auto pa = profile(a), pb = profile(b);
    if (pa != pb) return pa < pb;
    return a.chords < b.chords;
}

DiagramCombination DiagramCombination::unit(int strands) {
    return single(ChordDiagram(strands));
}

DiagramCombination DiagramCombination::single(const ChordDiagram& d, Rational c) {
    DiagramCombination x(d.strands);
    x.add_term(d, c);
    return x;
}

void DiagramCombination::add_term(const ChordDiagram& d, const Rational& c) {
    if (d.strands != strands_) throw std::invalid_argument("strand count mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational DiagramCombination::coefficient(const ChordDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool DiagramCombination::is_homogeneous() const {
    for (const auto& [d, c] : terms_)
        if (d.degree() != terms_.begin()->first.degree()) return false;
    return true;
}

DiagramCombination operator+(const DiagramCombination& a, const DiagramCombination& b) {
    if (a.strands_ != b.strands_) throw std::invalid_argument("strand count mismatch");
    DiagramCombination r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, c);
    return r;
}

DiagramCombination operator-(const DiagramCombination& a, const DiagramCombination& b) {
    if (a.strands_ != b.strands_) throw std::invalid_argument("strand count mismatch");
    DiagramCombination r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, -c);
    return r;
}

DiagramCombination operator*(const Rational& c, const DiagramCombination& x) {
    DiagramCombination r(x.strands_);
    for (const auto& [d, k] : x.terms_) r.add_term(d, c * k);
    return r;
}

ChordDiagram concat(const ChordDiagram& a, const ChordDiagram& b) {
    if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
    ChordDiagram r = a;
    r.chords.insert(r.chords.end(), b.chords.begin(), b.chords.end());
    return r;
}

DiagramCombination multiply(const DiagramCombination& a, const DiagramCombination& b) {
    if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
    DiagramCombination r(a.strands());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) r.add_term(concat(da, db), ca * cb);
    return r;
}

DiagramCombination relation_commute(int i, int j, int k, int l, int n) {
    int idx[4] = {i, j, k, l};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (idx[a] == idx[b]) throw std::invalid_argument("indices must be distinct");
    ChordDiagram ij(n, {Chord(i, j)});
    ChordDiagram kl(n, {Chord(k, l)});
    DiagramCombination r(n);
    r.add_term(concat(ij, kl), Rational(1));
    r.add_term(concat(kl, ij), Rational(-1));
    return r;
}

DiagramCombination relation_4t(int i, int j, int k, int n) {
    if (i == j || j == k || i == k) throw std::invalid_argument("indices must be distinct");
    ChordDiagram ij(n, {Chord(i, j)});
    ChordDiagram ik(n, {Chord(i, k)});
    ChordDiagram jk(n, {Chord(j, k)});
    DiagramCombination r(n);
    r.add_term(concat(ik, ij), Rational(1));
    r.add_term(concat(jk, ij), Rational(1));
    r.add_term(concat(ij, ik), Rational(-1));
    r.add_term(concat(ij, jk), Rational(-1));
    return r;
}

std::vector<ChordDiagram> enumerate_non_decreasing(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("invalid enumeration parameters");
    std::vector<ChordDiagram> out;
    // Distribute the degree over the orders 2..n, then fill each order block
    // with every word over its chord alphabet {t^{i nu} : i < nu}.
    std::vector<int> block(static_cast<std::size_t>(n) + 1, 0);
    auto fill_blocks = [&](auto&& self, int nu, int remaining) -> void {
        if (nu > n) {
            if (remaining != 0) return;
            std::vector<Chord> chords;
            auto fill_words = [&](auto&& words_self, int order, int slot) -> void {
                if (order > n) {
                    out.emplace_back(n, chords);
                    return;
                }
                if (slot == block[static_cast<std::size_t>(order)]) {
                    words_self(words_self, order + 1, 0);
                    return;
                }
                for (int i = 1; i < order; ++i) {
                    chords.emplace_back(i, order);
                    words_self(words_self, order, slot + 1);
                    chords.pop_back();
                }
            };
            fill_words(fill_words, 2, 0);
            return;
        }
        for (int take = 0; take <= remaining; ++take) {
            block[static_cast<std::size_t>(nu)] = take;
            self(self, nu + 1, remaining - take);
        }
        block[static_cast<std::size_t>(nu)] = 0;
    };
    if (n == 1) {
        if (m == 0) out.emplace_back(1);
        return out;
    }
    fill_blocks(fill_blocks, 2, m);
    std::sort(out.begin(), out.end(),
              [](const ChordDiagram& a, const ChordDiagram& b) { return precedes(a, b); });
    return out;
}

std::int64_t hilbert_coefficient(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("invalid parameters");
    // Expand prod_{nu=2..n} 1/(1-(nu-1)x) term by term; multiplying by
    // 1/(1-cx) turns g into g'[t] = g[t] + c*g'[t-1].
    std::vector<std::int64_t> g(static_cast<std::size_t>(m) + 1, 0);
    g[0] = 1;
    for (int nu = 2; nu <= n; ++nu) {
        const std::int64_t c = nu - 1;
        for (int t = 1; t <= m; ++t)
            g[static_cast<std::size_t>(t)] += c * g[static_cast<std::size_t>(t) - 1];
    }
    return g[static_cast<std::size_t>(m)];
}

namespace {

// Straightening step for an adjacent pair with order(left) > order(right).
// Disjoint chords commute. When the pair shares the endpoint a, with
// left = t^{a nu} and right = t^{ab'}, the commutator identity
//   [t^{ab'}, t^{a nu}] = [t^{a nu}, t^{b' nu}]
// (a consequence of the defining relation [t^{a b'} + t^{nu b'}, t^{a nu}] = 0)
// gives
//   t^{a nu} t^{ab'} = t^{ab'} t^{a nu} - t^{a nu} t^{b' nu} + t^{b' nu} t^{a nu}.
// Every produced term either loses the inversion or raises its profile
// lexicographically, and both measures are bounded, so rewriting terminates.
std::vector<std::pair<ChordDiagram, int>> rewrite_at(const ChordDiagram& d, std::size_t p) {
    const Chord left = d.chords[p];
    const Chord right = d.chords[p + 1];
    const int nu = left.order();
    std::vector<std::pair<ChordDiagram, int>> out;
    auto with_pair = [&](const Chord& c1, const Chord& c2, int coeff) {
        ChordDiagram e = d;
        e.chords[p] = c1;
        e.chords[p + 1] = c2;
        out.emplace_back(std::move(e), coeff);
    };
    const bool shares_low = left.low == right.low || left.low == right.high;
    if (!shares_low) {
        with_pair(right, left, 1);
        return out;
    }
    const int a = left.low;
    const int b = right.low == a ? right.high : right.low;
    with_pair(right, left, 1);
    with_pair(Chord(a, nu), Chord(b, nu), -1);
    with_pair(Chord(b, nu), Chord(a, nu), 1);
    return out;
}

std::vector<std::size_t> inversion_positions(const ChordDiagram& d) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p + 1 < d.chords.size(); ++p)
        if (d.chords[p].order() > d.chords[p + 1].order()) out.push_back(p);
    return out;
}

// Canonical strategy: among adjacent inversions pick the one whose right
// chord has the highest order, leftmost on ties.
std::size_t pick_canonical(const ChordDiagram& d, const std::vector<std::size_t>& inv) {
    std::size_t best = inv.front();
    for (std::size_t p : inv)
        if (d.chords[p + 1].order() > d.chords[best + 1].order()) best = p;
    return best;
}

DiagramCombination normal_form_impl(const DiagramCombination& x, std::mt19937_64* rng) {
    DiagramCombination result(x.strands());
    std::vector<std::pair<ChordDiagram, Rational>> pending(x.terms().begin(), x.terms().end());
    while (!pending.empty()) {
        auto [d, c] = std::move(pending.back());
        pending.pop_back();
        if (c.is_zero()) continue;
        const auto inv = inversion_positions(d);
        if (inv.empty()) {
            result.add_term(d, c);
            continue;
        }
        std::size_t p = rng ? inv[(*rng)() % inv.size()] : pick_canonical(d, inv);
        for (auto& [e, k] : rewrite_at(d, p)) pending.emplace_back(std::move(e), c * Rational(k));
    }
    return result;
}

}  // namespace

DiagramCombination normal_form(const DiagramCombination& x) {
    return normal_form_impl(x, nullptr);
}

DiagramCombination normal_form(const ChordDiagram& d) {
    return normal_form(DiagramCombination::single(d));
}

namespace detail {
DiagramCombination normal_form_randomized(const DiagramCombination& x, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return normal_form_impl(x, &rng);
}
}  // namespace detail

CablingSpec::CablingSpec(std::vector<int> k) : k_(std::move(k)) {
    offsets_.reserve(k_.size());
    for (int v : k_) {
        if (v < 0) throw std::invalid_argument("bundle sizes must be non-negative");
        offsets_.push_back(total_);
        total_ += v;
    }
}

int CablingSpec::owner(int p) const {
    for (int i = strands(); i >= 1; --i)
        if (p > offset(i)) return i;
    throw std::invalid_argument("point out of range");
}

DiagramCombination delta_cabling(const CablingSpec& spec, const DiagramCombination& x) {
    if (spec.strands() != x.strands())
        throw std::invalid_argument("cabling spec length must match strand count");
    DiagramCombination out(spec.total());
    for (const auto& [d, c] : x.terms()) {
        std::vector<std::vector<Chord>> partials{{}};
        for (const auto& chord : d.chords) {
            std::vector<std::vector<Chord>> next;
            for (int a = 1; a <= spec.bundle(chord.low); ++a)
                for (int b = 1; b <= spec.bundle(chord.high); ++b)
                    for (const auto& partial : partials) {
                        auto grown = partial;
                        grown.emplace_back(spec.offset(chord.low) + a,
                                           spec.offset(chord.high) + b);
                        next.push_back(std::move(grown));
                    }
            partials = std::move(next);
        }
        for (auto& chords : partials)
            out.add_term(ChordDiagram(spec.total(), std::move(chords)), c);
    }
    return out;
}

Path path_of_diagram(const ChordDiagram& d) {
    if (!is_non_decreasing(d))
        throw std::invalid_argument("path_of_diagram requires a non-decreasing diagram");
    std::vector<std::vector<int>> lows(static_cast<std::size_t>(d.strands) + 1);
    for (const auto& c : d.chords) lows[static_cast<std::size_t>(c.order())].push_back(c.low);
    std::vector<ConnectedPath> components;
    for (int nu = 1; nu <= d.strands; ++nu) {
        auto& block = lows[static_cast<std::size_t>(nu)];
        if (block.empty()) {
            components.push_back(ConnectedPath({nu}));
        } else {
            std::vector<int> letters(block.rbegin(), block.rend());
            letters.push_back(nu);
            components.push_back(ConnectedPath(std::move(letters)));
        }
    }
    return Path(std::move(components));
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer", start);
        return std::stoll(text.substr(start, pos - start));
    }
};

int parse_header(Cursor& cur) {
    cur.expect('n');
    cur.expect('=');
    std::int64_t n = cur.integer();
    cur.expect(';');
    if (n < 1) throw ParseError("strand count must be positive", cur.pos);
    return static_cast<int>(n);
}

Chord parse_chord_token(Cursor& cur, int n) {
    std::size_t at = cur.pos;
    cur.expect('t');
    cur.expect('(');
    std::int64_t i = cur.integer();
    cur.expect(',');
    std::int64_t j = cur.integer();
    cur.expect(')');
    if (i < 1 || j < 1 || i == j || i > n || j > n)
        throw ParseError("chord endpoints out of range", at);
    return Chord(static_cast<int>(i), static_cast<int>(j));
}

Rational parse_rational(Cursor& cur) {
    std::int64_t num = cur.integer();
    if (cur.accept('/')) {
        std::int64_t den = cur.integer();
        return Rational(num, den);
    }
    return Rational(num);
}

}  // namespace

ChordDiagram parse_diagram(const std::string& text) {
    Cursor cur{text};
    int n = parse_header(cur);
    ChordDiagram d(n);
    while (!cur.done()) d.chords.push_back(parse_chord_token(cur, n));
    return d;
}

DiagramCombination parse_combination(const std::string& text) {
    Cursor cur{text};
    int n = parse_header(cur);
    DiagramCombination x(n);
    if (cur.done()) return x;
    if (cur.peek() == 't') {  // bare diagram, coefficient 1
        ChordDiagram d(n);
        while (!cur.done()) d.chords.push_back(parse_chord_token(cur, n));
        x.add_term(d, Rational(1));
        return x;
    }
    if (cur.peek() == '0') {
        cur.expect('0');
        if (!cur.done()) throw ParseError("unexpected input after zero", cur.pos);
        return x;
    }
    bool first = true;
    while (!cur.done()) {
        Rational sign(1);
        if (cur.accept('+')) {
            if (first) throw ParseError("unexpected leading '+'", cur.pos);
        } else if (cur.accept('-')) {
            sign = Rational(-1);
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", cur.pos);
        }
        Rational coeff = sign * parse_rational(cur);
        cur.expect('*');
        cur.expect('[');
        ChordDiagram d(n);
        while (cur.peek() != ']') d.chords.push_back(parse_chord_token(cur, n));
        cur.expect(']');
        x.add_term(d, coeff);
        first = false;
    }
    return x;
}

std::string to_string(const ChordDiagram& d) {
    std::string s = "n=" + std::to_string(d.strands) + ";";
    for (const auto& c : d.chords)
        s += " t(" + std::to_string(c.low) + "," + std::to_string(c.high) + ")";
    return s;
}

std::string to_string(const DiagramCombination& x) {
    std::string s = "n=" + std::to_string(x.strands()) + "; ";
    if (x.is_zero()) return s + "0";
    bool first = true;
    for (const auto& [d, c] : x.terms()) {
        Rational shown = c;
        if (first) {
            first = false;
        } else if (c < Rational(0)) {
            s += " - ";
            shown = -c;
        } else {
            s += " + ";
        }
        s += shown.str() + "*[";
        bool first_chord = true;
        for (const auto& ch : d.chords) {
            if (!first_chord) s += ' ';
            first_chord = false;
            s += "t(" + std::to_string(ch.low) + "," + std::to_string(ch.high) + ")";
        }
        s += "]";
    }
    return s;
}

}  // namespace braidinv
