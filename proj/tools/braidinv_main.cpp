// Command line front end: every capability of the library behind
// deterministic, script-friendly text output.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidinv/braid.hpp"
#include "braidinv/errors.hpp"
#include "braidinv/quantum.hpp"
#include "braidinv/selftest.hpp"
#include "braidinv/weights.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitBadInput = 1;
constexpr int kExitBudget = 2;
constexpr int kExitSelftest = 3;

struct Options {
    bool as_json = false;
    std::int64_t budget = braidinv::kDefaultStepBudget;
    int max_dim = braidinv::kDefaultMaxDimension;
};

int run_comb(const std::string& braid_text, const Options& opt) {
    const braidinv::BraidWord b = braidinv::parse_braid(braid_text);
    const braidinv::CombedForm form = braidinv::comb(b);
    if (opt.as_json) {
        json layers = json::array();
        for (int nu = 2; nu <= form.strands; ++nu) {
            json letters = json::array();
            for (int l : form.layer(nu))
                letters.push_back({{"i", l > 0 ? l : -l}, {"nu", nu}, {"exp", l > 0 ? 1 : -1}});
            layers.push_back({{"nu", nu}, {"letters", letters}});
        }
        std::cout << json{{"strands", form.strands}, {"layers", layers}}.dump() << "\n";
    } else {
        std::cout << braidinv::to_string(form) << "\n";
    }
    return 0;
}

int run_normalize(const std::string& input, const Options& opt) {
    const braidinv::DiagramCombination x = braidinv::parse_combination(input);
    const braidinv::DiagramCombination nf = braidinv::normal_form(x);
    if (opt.as_json) {
        json terms = json::array();
        for (const auto& [d, c] : nf.terms())
            terms.push_back({{"coefficient", c.str()}, {"diagram", braidinv::to_string(d)}});
        std::cout << json{{"strands", nf.strands()}, {"terms", terms}}.dump() << "\n";
    } else {
        std::cout << braidinv::to_string(nf) << "\n";
    }
    return 0;
}

int run_weight(const std::string& diagram_text, const std::string& combination_text,
               const std::string& path_text, const std::string& sigma_text,
               const std::string& k_text, const Options& opt) {
    std::string value;
    if (!combination_text.empty()) {
        const auto x = braidinv::parse_combination(combination_text);
        if (path_text.empty())
            throw braidinv::ParseError("combinations are evaluated against --path", 0);
        value = braidinv::evaluate_combination(x, braidinv::parse_path(path_text), opt.budget).str();
    } else {
        const auto d = braidinv::parse_diagram(diagram_text);
        if (!path_text.empty()) {
            value = braidinv::weight_path(d, braidinv::parse_path(path_text), opt.budget).str();
        } else if (!k_text.empty()) {
            std::vector<int> k;
            std::size_t pos = 0;
            while (pos < k_text.size()) {
                std::size_t next = k_text.find(',', pos);
                if (next == std::string::npos) next = k_text.size();
                k.push_back(std::stoi(k_text.substr(pos, next - pos)));
                pos = next + 1;
            }
            braidinv::CablingSpec spec(k);
            const auto sigma = braidinv::parse_permutation(sigma_text, spec.total());
            value = braidinv::weight_cabled(d, spec, sigma, opt.budget).str();
        } else {
            const auto sigma = braidinv::parse_permutation(sigma_text, d.strands);
            value = braidinv::weight_sigma(d, sigma).str();
        }
    }
    if (opt.as_json)
        std::cout << json{{"value", value}}.dump() << "\n";
    else
        std::cout << value << "\n";
    return 0;
}

int run_dims(int n, int m, const Options& opt) {
    const auto count = static_cast<std::int64_t>(braidinv::enumerate_non_decreasing(n, m).size());
    const std::int64_t hilbert = braidinv::hilbert_coefficient(n, m);
    if (opt.as_json)
        std::cout << json{{"count", count}, {"hilbert", hilbert}, {"match", count == hilbert}}.dump()
                  << "\n";
    else
        std::cout << "count=" << count << " hilbert=" << hilbert << " match="
                  << (count == hilbert ? "true" : "false") << "\n";
    return 0;
}

int run_sepmatrix(int n, int m, const Options& opt) {
    const braidinv::SeparationMatrix sm = braidinv::separation_matrix(n, m, opt.budget);
    if (opt.as_json) {
        json rows = json::array();
        for (const auto& row : sm.entries) rows.push_back(row);
        std::cout << json{{"n", n}, {"m", m}, {"size", sm.basis.size()},
                          {"rows", rows}, {"unitriangular", sm.unitriangular}}.dump()
                  << "\n";
        return 0;
    }
    for (const auto& row : sm.entries) {
        for (std::size_t c = 0; c < row.size(); ++c)
            std::cout << (c ? " " : "") << row[c];
        std::cout << "\n";
    }
    std::cout << "unitriangular=" << (sm.unitriangular ? "true" : "false") << "\n";
    return 0;
}

int run_quantum(const std::string& braid_text, const std::string& singular_text,
                const std::string& sigma_text, int N, int M, const Options& opt) {
    braidinv::SeriesMatrix E;
    int strands = 0;
    if (!singular_text.empty()) {
        const auto s = braidinv::parse_singular_braid(singular_text);
        strands = s.strands;
        E = braidinv::quantum_invariant_singular(s, N, M, opt.max_dim);
    } else {
        const auto b = braidinv::parse_braid(braid_text);
        strands = b.strands;
        E = braidinv::quantum_invariant(b, N, M, opt.max_dim);
    }
    const auto sigma = braidinv::parse_permutation(sigma_text, strands);
    const braidinv::TruncatedSeries tr = braidinv::trace_sigma(E, sigma, N);
    if (opt.as_json)
        std::cout << json{{"sigma", sigma.cycle_string()}, {"trace", tr.str()}}.dump() << "\n";
    else
        std::cout << tr.str() << "\n";
    return 0;
}

int run_separate(const std::string& a_text, const std::string& b_text, int N, int M,
                 const Options& opt) {
    const auto a = braidinv::parse_braid(a_text);
    const auto b = braidinv::parse_braid(b_text);
    const braidinv::SeparationReport rep = braidinv::separate_braids(a, b, N, M, opt.max_dim);
    if (opt.as_json) {
        json j{{"separated", rep.separated}};
        if (rep.separated) {
            j["degree"] = rep.degree;
            j["sigma"] = rep.sigma->cycle_string();
            j["lhs"] = rep.lhs.str();
            j["rhs"] = rep.rhs.str();
        }
        j["oracle"] = rep.oracle_equal ? "equal" : "unequal";
        if (rep.needs_larger_parameters) j["hint"] = "increase N or M";
        std::cout << j.dump() << "\n";
    } else {
        std::cout << braidinv::to_string(rep) << "\n";
    }
    return 0;
}

int run_selftest(const Options& opt) {
    braidinv::SelftestConfig cfg;
    cfg.step_budget = opt.budget;
    const auto results = braidinv::run_selftest(cfg);
    bool all = true;
    if (opt.as_json) {
        json out = json::array();
        for (const auto& r : results) {
            out.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            all = all && r.passed;
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail
                      << "\n";
            all = all && r.passed;
        }
    }
    return all ? 0 : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-type and quantum invariants of pure braids"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Options opt;
    app.add_flag("--json", opt.as_json, "emit structured JSON with stable key order");
    app.add_option("--budget", opt.budget, "step budget for lifting enumerations");
    app.add_option("--max-dim", opt.max_dim, "largest allowed tensor dimension N^n");

    std::string braid_text, a_text, b_text, singular_text;
    std::string diagram_text, combination_text, path_text, sigma_text = "", k_text;
    int n = 3, m = 2, N = 2, M = braidinv::kDefaultTruncationOrder;

    auto* comb = app.add_subcommand("comb", "combed normal form of a pure braid");
    comb->add_option("--braid", braid_text, "braid word, e.g. \"n=3; s1 s2^-1\"")->required();

    auto* normalize = app.add_subcommand("normalize", "normal form in the non-decreasing basis");
    normalize->add_option("--input", combination_text, "diagram or combination")->required();

    auto* weight = app.add_subcommand("weight", "evaluate gl(N) weight systems");
    weight->add_option("--diagram", diagram_text, "chord diagram");
    weight->add_option("--combination", combination_text, "diagram combination");
    weight->add_option("--path", path_text, "path, e.g. \"{S1, S1 S3 S3}\"");
    weight->add_option("--sigma", sigma_text, "trace permutation in cycle notation");
    weight->add_option("--k", k_text, "bundle sizes, e.g. \"2,0,2\"");

    auto* dims = app.add_subcommand("dims", "basis counts against the Hilbert series");
    dims->add_option("--n", n, "strand count")->required();
    dims->add_option("--m", m, "degree")->required();

    auto* sepmatrix = app.add_subcommand("sepmatrix", "separation matrix over the basis");
    sepmatrix->add_option("--n", n, "strand count")->required();
    sepmatrix->add_option("--m", m, "degree")->required();

    auto* quantum = app.add_subcommand("quantum", "trace of the truncated quantum invariant");
    quantum->add_option("--braid", braid_text, "braid word");
    quantum->add_option("--singular", singular_text, "singular braid word with d<k> letters");
    quantum->add_option("--sigma", sigma_text, "trace permutation in cycle notation");
    quantum->add_option("--N", N, "gl(N) rank parameter");
    quantum->add_option("--M", M, "hbar truncation order");

    auto* separate = app.add_subcommand("separate", "separate two pure braids by quantum traces");
    separate->add_option("--a", a_text, "first braid word")->required();
    separate->add_option("--b", b_text, "second braid word")->required();
    separate->add_option("--N", N, "gl(N) rank parameter");
    separate->add_option("--M", M, "hbar truncation order");

    auto* selftest = app.add_subcommand("selftest", "run the full property suite");
    (void)selftest;

    CLI11_PARSE(app, argc, argv);

    try {
        if (comb->parsed()) return run_comb(braid_text, opt);
        if (normalize->parsed()) return run_normalize(combination_text, opt);
        if (weight->parsed())
            return run_weight(diagram_text, combination_text, path_text, sigma_text, k_text, opt);
        if (dims->parsed()) return run_dims(n, m, opt);
        if (sepmatrix->parsed()) return run_sepmatrix(n, m, opt);
        if (quantum->parsed())
            return run_quantum(braid_text, singular_text, sigma_text, N, M, opt);
        if (separate->parsed()) return run_separate(a_text, b_text, N, M, opt);
        if (selftest->parsed()) return run_selftest(opt);
    } catch (const braidinv::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const braidinv::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return 0;
}
