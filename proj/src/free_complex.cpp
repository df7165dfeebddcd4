#include "jumploci/free_complex.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>
#include <numeric>

namespace jumploci {

AlgMatrix AlgMatrix::identity(std::size_t n, const ArtinianAlgebra& a) {
    AlgMatrix m(n, n, a);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = a.unit();
    return m;
}

AlgMatrix alg_mat_mul(const ArtinianAlgebra& a, const AlgMatrix& lhs, const AlgMatrix& rhs) {
    if (lhs.cols != rhs.rows)
        throw std::invalid_argument("AlgMatrix shape mismatch in product");
    AlgMatrix out(lhs.rows, rhs.cols, a);
    for (std::size_t i = 0; i < lhs.rows; ++i)
        for (std::size_t k = 0; k < lhs.cols; ++k) {
            if (a.is_zero(lhs.at(i, k)))
                continue;
            for (std::size_t j = 0; j < rhs.cols; ++j) {
                if (a.is_zero(rhs.at(k, j)))
                    continue;
                out.at(i, j) = a.add(out.at(i, j), a.mul(lhs.at(i, k), rhs.at(k, j)));
            }
        }
    return out;
}

bool alg_mat_is_zero(const ArtinianAlgebra& a, const AlgMatrix& m) {
    return std::all_of(m.entries.begin(), m.entries.end(),
                       [&](const AlgElement& e) { return a.is_zero(e); });
}

namespace {

AlgElement det_permutation(const ArtinianAlgebra& a, const AlgMatrix& m) {
    const std::size_t n = m.rows;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    AlgElement result = a.zero();
    // walk all permutations; recompute parity by inversion count
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        AlgElement term = a.unit();
        for (std::size_t i = 0; i < n && !a.is_zero(term); ++i)
            term = a.mul(term, m.at(i, perm[i]));
        if (inversions % 2 == 1)
            term = a.scale(-1, term);
        result = a.add(result, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

// Laplace expansion with memoization over column subsets: D[S] is the
// determinant of the submatrix on rows 0..|S|-1 and columns S. Division-free.
AlgElement det_subset_dp(const ArtinianAlgebra& a, const AlgMatrix& m) {
    const std::size_t n = m.rows;
    std::vector<AlgElement> table(std::size_t(1) << n, a.zero());
    table[0] = a.unit();
    for (std::size_t mask = 1; mask < table.size(); ++mask) {
        const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
        AlgElement acc = a.zero();
        std::size_t position = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if (!(mask & (std::size_t(1) << col)))
                continue;
            const AlgElement& entry = m.at(row, col);
            if (!a.is_zero(entry)) {
                AlgElement term = a.mul(entry, table[mask ^ (std::size_t(1) << col)]);
                if ((row + position) % 2 == 1)
                    term = a.scale(-1, term);
                acc = a.add(acc, term);
            }
            ++position;
        }
        table[mask] = std::move(acc);
    }
    return table.back();
}

} // namespace

AlgElement alg_det(const ArtinianAlgebra& a, const AlgMatrix& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows == 0)
        return a.unit();
    return m.rows <= 5 ? det_permutation(a, m) : det_subset_dp(a, m);
}

bool alg_mat_invertible(const ArtinianAlgebra& a, const AlgMatrix& m) {
    if (m.rows != m.cols)
        return false;
    QMatrix residue(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            residue.at(i, j) = a.augmentation(m.at(i, j));
    return residue.rank() == m.rows;
}

namespace {

AlgElement alg_element_inverse(const ArtinianAlgebra& a, const AlgElement& u) {
    Rational c = a.augmentation(u);
    if (c == 0)
        throw MathError("element is not invertible", a.element_to_string(u));
    // u = c(1 - w) with w nilpotent; invert by the finite geometric series.
    AlgElement w = a.scale(Rational(1) / c, a.sub(a.scalar(c), u));
    AlgElement sum = a.unit();
    AlgElement power = w;
    for (std::size_t step = 0; step < a.dim() && !a.is_zero(power); ++step) {
        sum = a.add(sum, power);
        power = a.mul(power, w);
    }
    return a.scale(Rational(1) / c, sum);
}

AlgMatrix alg_mat_inverse(const ArtinianAlgebra& a, const AlgMatrix& m) {
    const std::size_t n = m.rows;
    AlgMatrix work = m;
    AlgMatrix inv = AlgMatrix::identity(n, a);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.augmentation(work.at(pivot, col)) == 0)
            ++pivot;
        if (pivot == n)
            throw MathError("matrix is not invertible over the local ring");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(col, j), work.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        AlgElement scale = alg_element_inverse(a, work.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            work.at(col, j) = a.mul(scale, work.at(col, j));
            inv.at(col, j) = a.mul(scale, inv.at(col, j));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.is_zero(work.at(r, col)))
                continue;
            AlgElement f = work.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                work.at(r, j) = a.sub(work.at(r, j), a.mul(f, work.at(col, j)));
                inv.at(r, j) = a.sub(inv.at(r, j), a.mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

} // namespace

FreeComplex::FreeComplex(ArtinianAlgebra ambient, int lo, std::vector<std::size_t> ranks,
                         std::vector<AlgMatrix> differentials)
    : ambient_(std::move(ambient)), lo_(lo), ranks_(std::move(ranks)),
      diffs_(std::move(differentials)) {
    if (ranks_.empty()) {
        if (!diffs_.empty())
            throw std::invalid_argument("empty complex cannot carry differentials");
        return;
    }
    if (diffs_.size() + 1 != ranks_.size())
        throw std::invalid_argument("expected one differential per adjacent degree pair");
    for (std::size_t i = 0; i + 1 < ranks_.size(); ++i) {
        if (diffs_[i].rows != ranks_[i + 1] || diffs_[i].cols != ranks_[i])
            throw std::invalid_argument("differential shape mismatch at degree " +
                                        std::to_string(lo_ + static_cast<int>(i)));
        for (const AlgElement& e : diffs_[i].entries)
            if (e.size() != ambient_.dim())
                throw std::invalid_argument("differential entry not over the ambient algebra");
    }
}

std::size_t FreeComplex::rank_at(int degree) const {
    if (ranks_.empty() || degree < lo_ || degree > hi())
        return 0;
    return ranks_[static_cast<std::size_t>(degree - lo_)];
}

AlgMatrix FreeComplex::differential_at(int degree) const {
    if (!ranks_.empty() && degree >= lo_ && degree < hi())
        return diffs_[static_cast<std::size_t>(degree - lo_)];
    return AlgMatrix(rank_at(degree + 1), rank_at(degree), ambient_);
}

bool check_complex(const FreeComplex& c) {
    for (int i = c.lo(); i + 1 <= c.hi(); ++i) {
        AlgMatrix composite = alg_mat_mul(c.ambient(), c.differential_at(i + 1), c.differential_at(i));
        if (!alg_mat_is_zero(c.ambient(), composite))
            return false;
    }
    return true;
}

namespace {

QMatrix residue_matrix_over_field([[maybe_unused]] const ArtinianAlgebra& a, const AlgMatrix& m) {
    QMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            out.at(i, j) = m.at(i, j)[0];
    return out;
}

// Q-linear matrix of an A-linear map: each entry becomes the multiplication
// operator on A's coordinates.
QMatrix k_linearize(const ArtinianAlgebra& a, const AlgMatrix& m) {
    const std::size_t d = a.dim();
    QMatrix out(m.rows * d, m.cols * d);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            const AlgElement& e = m.at(i, j);
            if (a.is_zero(e))
                continue;
            for (std::size_t bj = 0; bj < d; ++bj) {
                AlgElement image = a.mul(e, a.basis_element(bj));
                for (std::size_t bi = 0; bi < d; ++bi)
                    out.at(i * d + bi, j * d + bj) = image[bi];
            }
        }
    return out;
}

} // namespace

std::map<int, std::size_t> cohomology_dims_over_field(const FreeComplex& c) {
    if (!c.ambient().is_field())
        throw std::invalid_argument("cohomology_dims_over_field: ambient is not a field");
    std::map<int, std::size_t> dims;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        std::size_t r_out = residue_matrix_over_field(c.ambient(), c.differential_at(i)).rank();
        std::size_t r_in = residue_matrix_over_field(c.ambient(), c.differential_at(i - 1)).rank();
        dims[i] = c.rank_at(i) - r_out - r_in;
    }
    return dims;
}

std::map<int, std::size_t> cohomology_dims_k_linear(const FreeComplex& c) {
    std::map<int, std::size_t> dims;
    for (int i = c.lo(); i <= c.hi(); ++i) {
        std::size_t r_out = k_linearize(c.ambient(), c.differential_at(i)).rank();
        std::size_t r_in = k_linearize(c.ambient(), c.differential_at(i - 1)).rank();
        dims[i] = c.rank_at(i) * c.ambient().dim() - r_out - r_in;
    }
    return dims;
}

namespace {

// all size-r index subsets of {0..n-1}
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(r);
    std::iota(cur.begin(), cur.end(), 0);
    if (r > n)
        return out;
    while (true) {
        out.push_back(cur);
        std::size_t i = r;
        while (i > 0 && cur[i - 1] == n - r + (i - 1))
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < r; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace

Ideal minors_ideal(const ArtinianAlgebra& a, const AlgMatrix& m, long r,
                   const MinorsConfig& config) {
    if (r <= 0)
        return Ideal::unit_ideal(a);
    auto size = static_cast<std::size_t>(r);
    if (size > m.rows || size > m.cols)
        return Ideal::zero(a);

    if (a.is_field()) {
        // Over a field the minors span 0 or the whole field, decided by rank.
        QMatrix q = residue_matrix_over_field(a, m);
        return q.rank() >= size ? Ideal::unit_ideal(a) : Ideal::zero(a);
    }

    if (m.rows > config.max_dim || m.cols > config.max_dim)
        throw MathError("minors_ideal: matrix exceeds the configured dimension cap (" +
                        std::to_string(config.max_dim) + ")");

    // A minor with nonzero augmentation is a unit of the local ring, so the
    // ideal is the whole ring exactly when the residue matrix has rank >= r.
    {
        QMatrix residue(m.rows, m.cols);
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j)
                residue.at(i, j) = a.augmentation(m.at(i, j));
        if (residue.rank() >= size)
            return Ideal::unit_ideal(a);
    }

    // Minors touching an all-zero row or column vanish; enumerate the rest.
    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!a.is_zero(m.at(i, j))) {
                live_rows.push_back(i);
                break;
            }
    for (std::size_t j = 0; j < m.cols; ++j)
        for (std::size_t i = 0; i < m.rows; ++i)
            if (!a.is_zero(m.at(i, j))) {
                live_cols.push_back(j);
                break;
            }
    if (size > live_rows.size() || size > live_cols.size())
        return Ideal::zero(a);

    std::vector<AlgElement> gens;
    for (const auto& rows : combinations(live_rows.size(), size))
        for (const auto& cols : combinations(live_cols.size(), size)) {
            AlgMatrix sub(size, size, a);
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = 0; j < size; ++j)
                    sub.at(i, j) = m.at(live_rows[rows[i]], live_cols[cols[j]]);
            AlgElement det = alg_det(a, sub);
            if (!a.is_zero(det))
                gens.push_back(std::move(det));
        }
    return Ideal(a, std::move(gens));
}

Ideal jump_ideal(const FreeComplex& c, JumpIndex idx, const MinorsConfig& config) {
    if (idx.k < 1)
        throw std::invalid_argument("jump level k must be >= 1");
    if (!check_complex(c))
        throw MathError("jump_ideal: differentials do not compose to zero");

    const ArtinianAlgebra& a = c.ambient();
    const std::size_t n_prev = c.rank_at(idx.i - 1);
    const std::size_t n_cur = c.rank_at(idx.i);
    const std::size_t n_next = c.rank_at(idx.i + 1);

    AlgMatrix block(n_cur + n_next, n_prev + n_cur, a);
    AlgMatrix d_in = c.differential_at(idx.i - 1);
    AlgMatrix d_out = c.differential_at(idx.i);
    for (std::size_t i = 0; i < n_cur; ++i)
        for (std::size_t j = 0; j < n_prev; ++j)
            block.at(i, j) = d_in.at(i, j);
    for (std::size_t i = 0; i < n_next; ++i)
        for (std::size_t j = 0; j < n_cur; ++j)
            block.at(n_cur + i, n_prev + j) = d_out.at(i, j);

    long minor_size = static_cast<long>(n_cur) - static_cast<long>(idx.k) + 1;
    return minors_ideal(a, block, minor_size, config);
}

FreeComplex stabilize(const FreeComplex& c, const std::vector<StabilizeMove>& moves) {
    FreeComplex current = c;
    const ArtinianAlgebra& a = c.ambient();

    for (const StabilizeMove& move : moves) {
        if (const auto* acyclic = std::get_if<AcyclicSummand>(&move)) {
            int j = acyclic->degree;
            int lo = current.ranks().empty() ? j : std::min(current.lo(), j);
            int hi = current.ranks().empty() ? j + 1 : std::max(current.hi(), j + 1);
            std::vector<std::size_t> ranks;
            for (int d = lo; d <= hi; ++d)
                ranks.push_back(current.rank_at(d) + (d == j || d == j + 1 ? 1 : 0));
            std::vector<AlgMatrix> diffs;
            for (int d = lo; d < hi; ++d) {
                AlgMatrix old = current.differential_at(d);
                AlgMatrix next(ranks[static_cast<std::size_t>(d - lo + 1)],
                               ranks[static_cast<std::size_t>(d - lo)], a);
                for (std::size_t r = 0; r < old.rows; ++r)
                    for (std::size_t col = 0; col < old.cols; ++col)
                        next.at(r, col) = old.at(r, col);
                if (d == j)
                    next.at(next.rows - 1, next.cols - 1) = a.unit();
                diffs.push_back(std::move(next));
            }
            current = FreeComplex(a, lo, std::move(ranks), std::move(diffs));
        } else {
            const auto& change = std::get<BasisChange>(move);
            int j = change.degree;
            std::size_t n_j = current.rank_at(j);
            if (change.change.rows != n_j || change.change.cols != n_j)
                throw std::invalid_argument("basis change shape mismatch at degree " +
                                            std::to_string(j));
            if (!alg_mat_invertible(a, change.change))
                throw MathError("basis change matrix is not invertible over the local ring");
            if (n_j == 0 || current.ranks().empty()) {
                continue; // nothing to change
            }
            AlgMatrix inverse = alg_mat_inverse(a, change.change);
            std::vector<std::size_t> ranks(current.ranks());
            std::vector<AlgMatrix> diffs;
            for (int d = current.lo(); d < current.hi(); ++d) {
                AlgMatrix m = current.differential_at(d);
                if (d == j)
                    m = alg_mat_mul(a, m, change.change);
                if (d + 1 == j)
                    m = alg_mat_mul(a, inverse, m);
                diffs.push_back(std::move(m));
            }
            current = FreeComplex(a, current.lo(), std::move(ranks), std::move(diffs));
        }
    }
    return current;
}

FreeComplex tensor_along(const AlgebraMorphism& f, const FreeComplex& c) {
    if (!(c.ambient() == f.source()))
        throw std::invalid_argument("tensor_along: complex not over the morphism source");
    std::vector<AlgMatrix> diffs;
    for (int d = c.lo(); d < c.hi(); ++d) {
        AlgMatrix old = c.differential_at(d);
        AlgMatrix next(old.rows, old.cols, f.target());
        for (std::size_t r = 0; r < old.rows; ++r)
            for (std::size_t col = 0; col < old.cols; ++col)
                next.at(r, col) = f.apply(old.at(r, col));
        diffs.push_back(std::move(next));
    }
    return FreeComplex(f.target(), c.lo(), c.ranks(), std::move(diffs));
}

bool module_is_free(const ArtinianAlgebra& a, const std::vector<std::vector<AlgElement>>& gens,
                    std::size_t ambient_rank, std::string* witness) {
    const std::size_t d = a.dim();
    const std::size_t width = ambient_rank * d;

    auto flatten = [&](const std::vector<AlgElement>& v) {
        Row r(width);
        for (std::size_t c = 0; c < ambient_rank; ++c)
            for (std::size_t i = 0; i < d; ++i)
                r[c * d + i] = v[c][i];
        return r;
    };
    auto scale_by_basis = [&](const Row& r, std::size_t bi) {
        std::vector<AlgElement> v(ambient_rank);
        for (std::size_t c = 0; c < ambient_rank; ++c) {
            AlgElement e(d);
            for (std::size_t i = 0; i < d; ++i)
                e[i] = r[c * d + i];
            v[c] = a.mul(a.basis_element(bi), e);
        }
        return flatten(v);
    };

    RowSpan module_rows;
    for (const auto& g : gens) {
        if (g.size() != ambient_rank)
            throw std::invalid_argument("generator has wrong ambient rank");
        Row base = flatten(g);
        for (std::size_t bi = 0; bi < d; ++bi)
            module_rows.push_back(scale_by_basis(base, bi));
    }
    RowSpan module_basis = row_echelon_basis(module_rows, width);
    const std::size_t dim_m = module_basis.size();

    RowSpan m_times;
    for (const Row& v : module_basis)
        for (std::size_t bi = 1; bi < d; ++bi)
            m_times.push_back(scale_by_basis(v, bi));
    const std::size_t dim_mm = row_echelon_basis(m_times, width).size();

    const std::size_t minimal_gens = dim_m - dim_mm;
    bool free = dim_m == minimal_gens * d;
    if (witness) {
        *witness = "dim_Q M = " + std::to_string(dim_m) + ", minimal generators = " +
                   std::to_string(minimal_gens) + ", dim_Q A = " + std::to_string(d) +
                   (free ? " (free)" : " (not free)");
    }
    return free;
}

} // namespace jumploci
