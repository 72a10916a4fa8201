#include "braidinv/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "braidinv/errors.hpp"

namespace braidinv {

NPolynomial weight_sigma(const ChordDiagram& d, const Permutation& sigma) {
    if (sigma.size() != d.strands)
        throw std::invalid_argument("permutation size must match strand count");
    std::vector<int> images(static_cast<std::size_t>(d.strands));
    for (int p = 1; p <= d.strands; ++p) {
        int q = p;
        for (const auto& c : d.chords) {
            if (q == c.low)
                q = c.high;
            else if (q == c.high)
                q = c.low;
        }
        images[static_cast<std::size_t>(p) - 1] = sigma(q);
    }
    return NPolynomial::monomial(1, Permutation(images).cycle_count());
}

Path pair_to_path(const CablingSpec& spec, const Permutation& sigma) {
    if (sigma.size() != spec.total())
        throw std::invalid_argument("permutation size must match the total bundle size");
    std::vector<ConnectedPath> components;
    for (const auto& cycle : sigma.cycles()) {
        std::vector<int> letters;
        letters.reserve(cycle.size());
        for (int point : cycle) letters.push_back(spec.owner(point));
        components.push_back(ConnectedPath(std::move(letters)));
    }
    return Path(std::move(components));
}

std::pair<CablingSpec, Permutation> path_to_pair(const Path& p, int strands) {
    int n = p.max_letter();
    if (strands > 0) {
        if (strands < n) throw std::invalid_argument("path letters exceed strand count");
        n = strands;
    }
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    for (const auto& comp : p.components())
        for (int letter : comp.letters()) ++k[static_cast<std::size_t>(letter) - 1];
    CablingSpec spec(k);
    std::vector<int> next(static_cast<std::size_t>(n), 0);
    std::vector<int> images(static_cast<std::size_t>(spec.total()));
    for (const auto& comp : p.components()) {
        std::vector<int> points;
        points.reserve(comp.letters().size());
        for (int letter : comp.letters())
            points.push_back(spec.offset(letter) + ++next[static_cast<std::size_t>(letter) - 1]);
        for (std::size_t t = 0; t < points.size(); ++t)
            images[static_cast<std::size_t>(points[t]) - 1] = points[(t + 1) % points.size()];
    }
    return {spec, Permutation(images)};
}

NPolynomial weight_cabled(const ChordDiagram& d, const CablingSpec& spec,
                          const Permutation& sigma, std::int64_t step_budget) {
    if (spec.strands() != d.strands)
        throw std::invalid_argument("cabling spec length must match strand count");
    if (sigma.size() != spec.total())
        throw std::invalid_argument("permutation size must match the total bundle size");
    const int m = d.degree();
    NPolynomial sum;
    // Odometer over the per-chord bundle choices.
    std::vector<int> pick_low(static_cast<std::size_t>(m), 1);
    std::vector<int> pick_high(static_cast<std::size_t>(m), 1);
    std::int64_t lifting_count = 1;
    for (const auto& c : d.chords) {
        const std::int64_t ways =
            static_cast<std::int64_t>(spec.bundle(c.low)) * spec.bundle(c.high);
        if (ways == 0) return sum;
        if (lifting_count > step_budget / ways)
            throw BudgetError("cabled lifting enumeration exceeds the step budget");
        lifting_count *= ways;
    }
    if (lifting_count * (spec.total() + m) > step_budget)
        throw BudgetError("cabled lifting enumeration exceeds the step budget");
    while (true) {
        ChordDiagram lifted(spec.total());
        for (int t = 0; t < m; ++t) {
            const Chord& c = d.chords[static_cast<std::size_t>(t)];
            lifted.chords.emplace_back(spec.offset(c.low) + pick_low[static_cast<std::size_t>(t)],
                                       spec.offset(c.high) + pick_high[static_cast<std::size_t>(t)]);
        }
        sum = sum + weight_sigma(lifted, sigma);
        int t = 0;
        for (; t < m; ++t) {
            auto& a = pick_low[static_cast<std::size_t>(t)];
            auto& b = pick_high[static_cast<std::size_t>(t)];
            const Chord& c = d.chords[static_cast<std::size_t>(t)];
            if (b < spec.bundle(c.high)) {
                ++b;
                break;
            }
            b = 1;
            if (a < spec.bundle(c.low)) {
                ++a;
                break;
            }
            a = 1;
        }
        if (t == m) break;
    }
    return sum;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
    int classes() {
        int c = 0;
        for (int x = 0; x < static_cast<int>(parent.size()); ++x)
            if (find(x) == x) ++c;
        return c;
    }
};

}  // namespace

void for_each_lifting(const ChordDiagram& d, const Path& p,
                      const std::function<void(const Lifting&)>& fn,
                      std::int64_t step_budget) {
    if (p.max_letter() > d.strands)
        throw std::invalid_argument("path letters exceed the diagram's strand count");
    const int m = d.degree();
    const int r = p.component_count();
    if (m == 0) {
        Lifting lift;
        lift.component_count = r;
        fn(lift);
        return;
    }
    // Subintervals carrying each strand letter, as (component, letter position).
    std::vector<std::vector<std::pair<int, int>>> occ(static_cast<std::size_t>(d.strands) + 1);
    std::vector<int> comp_offset(static_cast<std::size_t>(r), 0);
    int total_sites = 0;
    for (int c = 0; c < r; ++c) {
        comp_offset[static_cast<std::size_t>(c)] = total_sites;
        const auto& letters = p.components()[static_cast<std::size_t>(c)].letters();
        for (int lp = 0; lp < static_cast<int>(letters.size()); ++lp)
            occ[static_cast<std::size_t>(letters[static_cast<std::size_t>(lp)])].emplace_back(c, lp);
        total_sites += static_cast<int>(letters.size()) * m;
    }
    std::int64_t lifting_count = 1;
    for (const auto& c : d.chords) {
        const std::int64_t ways =
            static_cast<std::int64_t>(occ[static_cast<std::size_t>(c.low)].size()) *
            static_cast<std::int64_t>(occ[static_cast<std::size_t>(c.high)].size());
        if (ways == 0) return;
        if (lifting_count > step_budget / (ways ? ways : 1))
            throw BudgetError("lifting enumeration exceeds the step budget");
        lifting_count *= ways;
    }
    if (lifting_count * (total_sites + m) > step_budget)
        throw BudgetError("lifting enumeration exceeds the step budget");

    // Site/arc ids: within component c the site of chord t on letter position
    // lp is comp_offset[c] + lp*m + (t-1); arc k follows site k cyclically.
    auto site_id = [&](std::pair<int, int> sub, int chord_t) {
        return comp_offset[static_cast<std::size_t>(sub.first)] + sub.second * m + chord_t;
    };
    std::vector<int> comp_sites(static_cast<std::size_t>(r));
    for (int c = 0; c < r; ++c)
        comp_sites[static_cast<std::size_t>(c)] =
            p.components()[static_cast<std::size_t>(c)].length() * m;
    auto arc_before = [&](std::pair<int, int> sub, int chord_t) {
        const int local = sub.second * m + chord_t;
        const int s = comp_sites[static_cast<std::size_t>(sub.first)];
        return comp_offset[static_cast<std::size_t>(sub.first)] + (local - 1 + s) % s;
    };

    Lifting lift;
    lift.choice.assign(static_cast<std::size_t>(m), {});
    std::vector<int> pick_low(static_cast<std::size_t>(m), 0);
    std::vector<int> pick_high(static_cast<std::size_t>(m), 0);
    std::vector<bool> used(static_cast<std::size_t>(total_sites));
    while (true) {
        for (int t = 0; t < m; ++t) {
            const Chord& c = d.chords[static_cast<std::size_t>(t)];
            lift.choice[static_cast<std::size_t>(t)] = {
                occ[static_cast<std::size_t>(c.low)][static_cast<std::size_t>(
                    pick_low[static_cast<std::size_t>(t)])],
                occ[static_cast<std::size_t>(c.high)][static_cast<std::size_t>(
                    pick_high[static_cast<std::size_t>(t)])]};
        }
        std::fill(used.begin(), used.end(), false);
        UnionFind uf(total_sites);
        for (int t = 0; t < m; ++t) {
            used[static_cast<std::size_t>(site_id(lift.choice[static_cast<std::size_t>(t)].first, t))] = true;
            used[static_cast<std::size_t>(site_id(lift.choice[static_cast<std::size_t>(t)].second, t))] = true;
        }
        // Unused sites pass straight through; each bridge reconnects the four
        // adjacent arc ends crosswise.
        for (int s = 0; s < total_sites; ++s)
            if (!used[static_cast<std::size_t>(s)]) {
                int comp = 0;
                while (comp + 1 < r && comp_offset[static_cast<std::size_t>(comp) + 1] <= s) ++comp;
                const int sz = comp_sites[static_cast<std::size_t>(comp)];
                const int local = s - comp_offset[static_cast<std::size_t>(comp)];
                uf.unite(comp_offset[static_cast<std::size_t>(comp)] + (local - 1 + sz) % sz, s);
            }
        for (int t = 0; t < m; ++t) {
            const auto& [sub_a, sub_b] = lift.choice[static_cast<std::size_t>(t)];
            uf.unite(arc_before(sub_a, t), site_id(sub_b, t));
            uf.unite(arc_before(sub_b, t), site_id(sub_a, t));
        }
        lift.component_count = uf.classes();
        lift.has_connecting = false;
        for (int t = 0; t < m && !lift.has_connecting; ++t)
            lift.has_connecting = lift.choice[static_cast<std::size_t>(t)].first.first !=
                                  lift.choice[static_cast<std::size_t>(t)].second.first;
        lift.has_crossing = false;
        for (int s = 0; s < m && !lift.has_crossing; ++s) {
            const auto& cs = lift.choice[static_cast<std::size_t>(s)];
            if (cs.first.first != cs.second.first) continue;
            const int s_lo = std::min(site_id(cs.first, s), site_id(cs.second, s));
            const int s_hi = std::max(site_id(cs.first, s), site_id(cs.second, s));
            for (int t = s + 1; t < m && !lift.has_crossing; ++t) {
                const auto& ct = lift.choice[static_cast<std::size_t>(t)];
                if (ct.first.first != ct.second.first || ct.first.first != cs.first.first)
                    continue;
                const int t_lo = std::min(site_id(ct.first, t), site_id(ct.second, t));
                const int t_hi = std::max(site_id(ct.first, t), site_id(ct.second, t));
                lift.has_crossing =
                    (s_lo < t_lo && t_lo < s_hi && s_hi < t_hi) ||
                    (t_lo < s_lo && s_lo < t_hi && t_hi < s_hi);
            }
        }
        fn(lift);

        int t = 0;
        for (; t < m; ++t) {
            const Chord& c = d.chords[static_cast<std::size_t>(t)];
            auto& b = pick_high[static_cast<std::size_t>(t)];
            if (b + 1 < static_cast<int>(occ[static_cast<std::size_t>(c.high)].size())) {
                ++b;
                break;
            }
            b = 0;
            auto& a = pick_low[static_cast<std::size_t>(t)];
            if (a + 1 < static_cast<int>(occ[static_cast<std::size_t>(c.low)].size())) {
                ++a;
                break;
            }
            a = 0;
        }
        if (t == m) break;
    }
}

NPolynomial weight_path(const ChordDiagram& d, const Path& p, std::int64_t step_budget) {
    NPolynomial sum;
    for_each_lifting(
        d, p, [&sum](const Lifting& lift) { sum.add_monomial(1, lift.component_count); },
        step_budget);
    return sum;
}

RationalNPolynomial evaluate_combination(const DiagramCombination& x, const Path& p,
                                         std::int64_t step_budget) {
    if (p.max_letter() > x.strands() && !x.is_zero())
        throw std::invalid_argument("path letters exceed the combination's strand count");
    RationalNPolynomial sum;
    for (const auto& [d, c] : x.terms())
        sum = sum + c * to_rational_polynomial(weight_path(d, p, step_budget));
    return sum;
}

std::int64_t flat_separation_entry(int nu, const std::vector<int>& i_list,
                                   const std::vector<int>& j_list, int n) {
    if (nu < 2 || nu > n) throw std::invalid_argument("order nu out of range");
    if (i_list.size() != j_list.size())
        throw std::invalid_argument("index lists must have equal length");
    for (int v : i_list)
        if (v < 1 || v >= nu) throw std::invalid_argument("diagram index out of range");
    for (int v : j_list)
        if (v < 1 || v >= nu) throw std::invalid_argument("path index out of range");
    const int m = static_cast<int>(i_list.size());
    ChordDiagram d(n);
    for (int v : i_list) d.chords.emplace_back(v, nu);
    std::vector<int> letters(j_list.rbegin(), j_list.rend());
    letters.push_back(nu);
    Path p({ConnectedPath(std::move(letters))});
    return weight_path(d, p).coeff(m + 1);
}

SeparationMatrix separation_matrix(int n, int m, std::int64_t step_budget) {
    if (n < 2 || m < 0) throw std::invalid_argument("invalid separation matrix parameters");
    SeparationMatrix out;
    out.basis = enumerate_non_decreasing(n, m);
    const int size = static_cast<int>(out.basis.size());
    std::vector<Path> paths;
    paths.reserve(out.basis.size());
    for (const auto& d : out.basis) paths.push_back(path_of_diagram(d));

    // Conservative pre-estimate of the total lifting work.
    std::int64_t estimate = 0;
    for (const auto& p : paths) {
        std::vector<std::int64_t> occ(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& comp : p.components())
            for (int letter : comp.letters()) ++occ[static_cast<std::size_t>(letter)];
        for (const auto& d : out.basis) {
            std::int64_t liftings = 1;
            for (const auto& c : d.chords) {
                liftings *= occ[static_cast<std::size_t>(c.low)] * occ[static_cast<std::size_t>(c.high)];
                if (liftings > step_budget) break;
            }
            const std::int64_t cost = liftings * (p.total_letters() * m + m + 1);
            if (cost > step_budget - estimate)
                throw BudgetError("separation matrix of size " + std::to_string(size) +
                                  " exceeds the step budget");
            estimate += cost;
        }
    }

    out.entries.assign(static_cast<std::size_t>(size),
                       std::vector<std::int64_t>(static_cast<std::size_t>(size), 0));
    out.unitriangular = true;
    for (int a = 0; a < size; ++a)
        for (int b = 0; b < size; ++b) {
            const std::int64_t v =
                weight_path(out.basis[static_cast<std::size_t>(b)],
                            paths[static_cast<std::size_t>(a)], step_budget)
                    .coeff(m + n);
            out.entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
            if ((a == b && v != 1) || (b > a && v != 0)) out.unitriangular = false;
        }
    return out;
}

}  // namespace braidinv
