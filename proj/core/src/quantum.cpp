#include "braidinv/quantum.hpp"

#include <stdexcept>

#include "braidinv/errors.hpp"
#include "braidinv/weights.hpp"

namespace braidinv {

SeriesMatrix::SeriesMatrix(int dim, int order)
    : dim_(dim), order_(order),
      a_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
         TruncatedSeries(order)) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
}

SeriesMatrix SeriesMatrix::identity(int dim, int order) {
    SeriesMatrix m(dim, order);
    for (int i = 0; i < dim; ++i) m.at(i, i) = TruncatedSeries(order, Rational(1));
    return m;
}

bool SeriesMatrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

SeriesMatrix operator+(const SeriesMatrix& x, const SeriesMatrix& y) {
    if (x.dim_ != y.dim_ || x.order_ != y.order_)
        throw std::invalid_argument("matrix shape mismatch");
    SeriesMatrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
    return r;
}

SeriesMatrix operator-(const SeriesMatrix& x, const SeriesMatrix& y) {
    if (x.dim_ != y.dim_ || x.order_ != y.order_)
        throw std::invalid_argument("matrix shape mismatch");
    SeriesMatrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
    return r;
}

SeriesMatrix operator*(const SeriesMatrix& x, const SeriesMatrix& y) {
    if (x.dim_ != y.dim_ || x.order_ != y.order_)
        throw std::invalid_argument("matrix shape mismatch");
    SeriesMatrix r(x.dim_, x.order_);
    for (int i = 0; i < x.dim_; ++i)
        for (int k = 0; k < x.dim_; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (int j = 0; j < x.dim_; ++j) {
                if (y.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
            }
        }
    return r;
}

bool operator==(const SeriesMatrix& x, const SeriesMatrix& y) {
    return x.dim_ == y.dim_ && x.order_ == y.order_ && x.a_ == y.a_;
}

namespace {

void check_quantum_params(int N, int M) {
    if (N < 2) throw std::invalid_argument("N must be at least 2");
    if (M < 1) throw std::invalid_argument("truncation order must be at least 1");
}

int tensor_dimension(int N, int n, int max_dimension) {
    std::int64_t dim = 1;
    for (int t = 0; t < n; ++t) {
        dim *= N;
        if (dim > max_dimension)
            throw BudgetError("tensor dimension " + std::to_string(N) + "^" +
                              std::to_string(n) + " exceeds the guard of " +
                              std::to_string(max_dimension));
    }
    return static_cast<int>(dim);
}

}  // namespace

// Braiding of the defining representation at q = e^hbar:
//   e_i (x) e_i -> q e_i (x) e_i
//   e_i (x) e_j -> e_j (x) e_i                        for i < j
//   e_i (x) e_j -> e_j (x) e_i + (q - q^-1) e_i (x) e_j  for i > j.
SeriesMatrix r_matrix(int N, int M) {
    check_quantum_params(N, M);
    const TruncatedSeries q = TruncatedSeries::exponential(M, Rational(1));
    const TruncatedSeries qinv = TruncatedSeries::exponential(M, Rational(-1));
    const TruncatedSeries one(M, Rational(1));
    SeriesMatrix r(N * N, M);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const int col = (i - 1) * N + (j - 1);
            const int flip = (j - 1) * N + (i - 1);
            if (i == j) {
                r.at(col, col) = q;
            } else if (i < j) {
                r.at(flip, col) = one;
            } else {
                r.at(flip, col) = one;
                r.at(col, col) = q - qinv;
            }
        }
    return r;
}

// Closed-form inverse of the braiding above (q replaced by q^-1 and the
// skein term moved to the other side of the diagonal).
SeriesMatrix r_matrix_inverse(int N, int M) {
    check_quantum_params(N, M);
    const TruncatedSeries q = TruncatedSeries::exponential(M, Rational(1));
    const TruncatedSeries qinv = TruncatedSeries::exponential(M, Rational(-1));
    const TruncatedSeries one(M, Rational(1));
    SeriesMatrix r(N * N, M);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            const int col = (i - 1) * N + (j - 1);
            const int flip = (j - 1) * N + (i - 1);
            if (i == j) {
                r.at(col, col) = qinv;
            } else if (i > j) {
                r.at(flip, col) = one;
            } else {
                r.at(flip, col) = one;
                r.at(col, col) = qinv - q;
            }
        }
    return r;
}

SeriesMatrix local_operator(const SeriesMatrix& two_site, int N, int n, int slot) {
    if (two_site.dim() != N * N) throw std::invalid_argument("two-site operator has wrong dimension");
    if (slot < 1 || slot >= n) throw std::invalid_argument("slot out of range");
    std::int64_t dim = 1;
    for (int t = 0; t < n; ++t) dim *= N;
    SeriesMatrix out(static_cast<int>(dim), two_site.order());
    std::int64_t w_hi = 1;  // weight of the digit at position slot
    for (int t = 0; t < n - slot; ++t) w_hi *= N;
    const std::int64_t w_lo = w_hi / N;
    for (int col = 0; col < static_cast<int>(dim); ++col) {
        const int a = static_cast<int>((col / w_hi) % N);
        const int b = static_cast<int>((col / w_lo) % N);
        const int col2 = a * N + b;
        for (int a2 = 0; a2 < N; ++a2)
            for (int b2 = 0; b2 < N; ++b2) {
                const TruncatedSeries& c = two_site.at(a2 * N + b2, col2);
                if (c.is_zero()) continue;
                const int row = col + static_cast<int>((a2 - a) * w_hi + (b2 - b) * w_lo);
                out.at(row, col) = c;
            }
    }
    return out;
}

namespace {

// Sparse column form of a two-site operator: for each input digit pair, the
// list of (output digit pair, coefficient).
struct TwoSiteColumns {
    int N = 0;
    std::vector<std::vector<std::pair<int, TruncatedSeries>>> cols;

    explicit TwoSiteColumns(const SeriesMatrix& op, int N_) : N(N_), cols(static_cast<std::size_t>(N_ * N_)) {
        for (int c = 0; c < N * N; ++c)
            for (int r = 0; r < N * N; ++r)
                if (!op.at(r, c).is_zero())
                    cols[static_cast<std::size_t>(c)].emplace_back(r, op.at(r, c));
    }
};

// E <- E * (op acting at tensor positions slot, slot+1).
void apply_two_site_right(SeriesMatrix& E, const TwoSiteColumns& op, int slot, int N, int n) {
    std::int64_t w_hi = 1;
    for (int t = 0; t < n - slot; ++t) w_hi *= N;
    const std::int64_t w_lo = w_hi / N;
    const int dim = E.dim();
    SeriesMatrix next(dim, E.order());
    for (int col = 0; col < dim; ++col) {
        const int a = static_cast<int>((col / w_hi) % N);
        const int b = static_cast<int>((col / w_lo) % N);
        for (const auto& [rc2, coeff] : op.cols[static_cast<std::size_t>(a * N + b)]) {
            const int z = col + static_cast<int>((rc2 / N - a) * w_hi + (rc2 % N - b) * w_lo);
            for (int row = 0; row < dim; ++row) {
                if (E.at(row, z).is_zero()) continue;
                next.at(row, col) = next.at(row, col) + E.at(row, z) * coeff;
            }
        }
    }
    E = std::move(next);
}

}  // namespace

SeriesMatrix quantum_invariant(const BraidWord& b, int N, int M, int max_dimension) {
    check_quantum_params(N, M);
    const int dim = tensor_dimension(N, b.strands, max_dimension);
    const TwoSiteColumns over(r_matrix(N, M), N);
    const TwoSiteColumns under(r_matrix_inverse(N, M), N);
    SeriesMatrix E = SeriesMatrix::identity(dim, M);
    for (const auto& l : b.letters)
        apply_two_site_right(E, l.sign > 0 ? over : under, l.index, N, b.strands);
    return E;
}

SeriesMatrix quantum_invariant_singular(const SingularBraidWord& s, int N, int M,
                                        int max_dimension) {
    check_quantum_params(N, M);
    const int dim = tensor_dimension(N, s.strands, max_dimension);
    const SeriesMatrix r_over = r_matrix(N, M);
    const SeriesMatrix r_under = r_matrix_inverse(N, M);
    const TwoSiteColumns over(r_over, N);
    const TwoSiteColumns under(r_under, N);
    const TwoSiteColumns resolved(r_over - r_under, N);
    SeriesMatrix E = SeriesMatrix::identity(dim, M);
    for (const auto& l : s.letters) {
        const TwoSiteColumns& op =
            l.mark == Mark::Double ? resolved : (l.mark == Mark::Over ? over : under);
        apply_two_site_right(E, op, l.index, N, s.strands);
    }
    return E;
}

TruncatedSeries trace_sigma(const SeriesMatrix& E, const Permutation& sigma, int N) {
    const int n = sigma.size();
    std::int64_t dim = 1;
    for (int t = 0; t < n; ++t) dim *= N;
    if (dim != E.dim())
        throw std::invalid_argument("permutation size does not match matrix dimension");
    // tr(P_sigma E) = sum_z E[z][pi(z)] with pi permuting the tensor digits.
    std::vector<std::int64_t> weight(static_cast<std::size_t>(n) + 1, 1);
    for (int t = n - 1; t >= 1; --t)
        weight[static_cast<std::size_t>(t)] = weight[static_cast<std::size_t>(t) + 1] * N;
    TruncatedSeries tr(E.order());
    for (int z = 0; z < E.dim(); ++z) {
        std::int64_t img = 0;
        for (int t = 1; t <= n; ++t) {
            const int digit = static_cast<int>((z / weight[static_cast<std::size_t>(t)]) % N);
            img += digit * weight[static_cast<std::size_t>(sigma(t))];
        }
        tr = tr + E.at(z, static_cast<int>(img));
    }
    return tr;
}

namespace {

// Permutation of the strand starting positions induced by treating the given
// marks as crossings, composed in word order (first letter outermost when
// realized as permutation matrices multiplied left to right).
Permutation word_permutation(const SingularBraidWord& s, bool doubles_cross) {
    Permutation acc(s.strands);
    for (const auto& l : s.letters) {
        if (l.mark == Mark::Double && !doubles_cross) continue;
        acc = acc * Permutation::transposition(s.strands, l.index, l.index + 1);
    }
    return acc;
}

}  // namespace

bool weight_consistency(const SingularBraidWord& s, const Permutation& sigma, int N, int M,
                        int max_dimension) {
    const int m = s.double_point_count();
    if (M < m) throw std::invalid_argument("truncation order must be at least the degree");
    if (sigma.size() != s.strands)
        throw std::invalid_argument("permutation size must match strand count");
    const ChordDiagram d = chord_diagram_of_singular(s);  // checks purity

    // The hbar^m coefficient of J(s) is scale^m times the permutation matrix
    // in which double points do not cross; pi realigns it with the chord
    // transpositions used by the weight system.
    Permutation rho = word_permutation(s, false);
    Permutation chords_last(s.strands);
    for (auto it = d.chords.rbegin(); it != d.chords.rend(); ++it)
        chords_last = chords_last * Permutation::transposition(s.strands, it->low, it->high);
    Permutation pi = chords_last * rho.inverse();

    const SeriesMatrix J = quantum_invariant_singular(s, N, M, max_dimension);
    const Rational lhs = trace_sigma(J, sigma * pi, N).coeff(m);
    const Rational rhs = Rational(kQuantumWeightScale).pow(static_cast<unsigned>(m)) *
                         Rational(weight_sigma(d, sigma).evaluate(N));
    return lhs == rhs;
}

SeparationReport separate_braids(const BraidWord& a, const BraidWord& b, int N, int M,
                                 int max_dimension) {
    if (a.strands != b.strands) throw std::invalid_argument("strand count mismatch");
    if (!is_pure(a) || !is_pure(b))
        throw std::invalid_argument("separation requires pure braids");
    SeparationReport report;
    report.oracle_equal = braids_equal(a, b);
    const SeriesMatrix Ja = quantum_invariant(a, N, M, max_dimension);
    const SeriesMatrix Jb = quantum_invariant(b, N, M, max_dimension);
    const auto sigmas = all_permutations(a.strands);
    std::vector<TruncatedSeries> ta, tb;
    ta.reserve(sigmas.size());
    tb.reserve(sigmas.size());
    for (const auto& sigma : sigmas) {
        ta.push_back(trace_sigma(Ja, sigma, N));
        tb.push_back(trace_sigma(Jb, sigma, N));
    }
    for (int m = 0; m <= M && !report.separated; ++m)
        for (std::size_t s = 0; s < sigmas.size(); ++s)
            if (ta[s].coeff(m) != tb[s].coeff(m)) {
                report.separated = true;
                report.degree = m;
                report.sigma = sigmas[s];
                report.lhs = ta[s].coeff(m);
                report.rhs = tb[s].coeff(m);
                break;
            }
    report.needs_larger_parameters = !report.separated && !report.oracle_equal;
    return report;
}

std::string to_string(const SeparationReport& r) {
    std::string s;
    if (r.separated) {
        s = "separated=true degree=" + std::to_string(r.degree) +
            " sigma=" + r.sigma->cycle_string() + " lhs=" + r.lhs.str() +
            " rhs=" + r.rhs.str();
    } else {
        s = "separated=false";
    }
    s += "\noracle=";
    s += r.oracle_equal ? "equal" : "unequal";
    if (r.needs_larger_parameters) s += "\nhint=increase N or M";
    return s;
}

}  // namespace braidinv
