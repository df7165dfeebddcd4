#include "jumploci/artinian.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>
#include <map>

namespace jumploci {

ArtinianAlgebra::ArtinianAlgebra(std::vector<std::string> basis_labels,
                                 std::vector<std::vector<AlgElement>> products)
    : labels_(std::move(basis_labels)), prod_(std::move(products)) {
    const std::size_t n = labels_.size();
    if (n == 0)
        throw std::invalid_argument("algebra needs at least the unit");
    if (prod_.size() != n)
        throw std::invalid_argument("product table has wrong row count");
    for (const auto& row : prod_) {
        if (row.size() != n)
            throw std::invalid_argument("product table has wrong column count");
        for (const auto& e : row)
            if (e.size() != n)
                throw std::invalid_argument("product entry has wrong coordinate length");
    }
}

ArtinianAlgebra ArtinianAlgebra::rational_field() {
    return ArtinianAlgebra({"1"}, {{AlgElement{1}}});
}

AlgElement ArtinianAlgebra::unit() const { return basis_element(0); }

AlgElement ArtinianAlgebra::basis_element(std::size_t i) const {
    AlgElement e(dim());
    e.at(i) = 1;
    return e;
}

AlgElement ArtinianAlgebra::scalar(const Rational& c) const {
    AlgElement e(dim());
    e[0] = c;
    return e;
}

AlgElement ArtinianAlgebra::mul(const AlgElement& u, const AlgElement& v) const {
    const std::size_t n = dim();
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("element dimension mismatch");
    AlgElement out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 0)
                continue;
            Rational c = u[i] * v[j];
            const AlgElement& bij = prod_[i][j];
            for (std::size_t l = 0; l < n; ++l)
                if (bij[l] != 0)
                    out[l] += c * bij[l];
        }
    }
    return out;
}

AlgElement ArtinianAlgebra::add(const AlgElement& u, const AlgElement& v) const {
    if (u.size() != dim() || v.size() != dim())
        throw std::invalid_argument("element dimension mismatch");
    AlgElement out(u);
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] += v[i];
    return out;
}

AlgElement ArtinianAlgebra::sub(const AlgElement& u, const AlgElement& v) const {
    if (u.size() != dim() || v.size() != dim())
        throw std::invalid_argument("element dimension mismatch");
    AlgElement out(u);
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] -= v[i];
    return out;
}

AlgElement ArtinianAlgebra::scale(const Rational& c, const AlgElement& u) const {
    AlgElement out(u);
    for (auto& x : out)
        x *= c;
    return out;
}

bool ArtinianAlgebra::is_zero(const AlgElement& u) const {
    return std::all_of(u.begin(), u.end(), [](const Rational& x) { return x == 0; });
}

Rational ArtinianAlgebra::augmentation(const AlgElement& u) const {
    if (u.size() != dim())
        throw std::invalid_argument("element dimension mismatch");
    return u[0];
}

std::string ArtinianAlgebra::element_to_string(const AlgElement& u) const {
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (i == 0)
            s += jumploci::to_string(u[i]);
        else if (u[i] == 1)
            s += labels_[i];
        else if (u[i] == -1)
            s += "-" + labels_[i];
        else
            s += jumploci::to_string(u[i]) + "*" + labels_[i];
    }
    return s.empty() ? "0" : s;
}

ArtinianAlgebra ArtinianAlgebra::from_truncation(unsigned vars, unsigned order,
                                                 const std::vector<Polynomial>& relations,
                                                 std::vector<std::string> var_names) {
    if (order < 1)
        throw std::invalid_argument("truncation order must be >= 1");
    if (var_names.empty()) {
        static const char* defaults[] = {"x", "y", "z", "w"};
        for (unsigned i = 0; i < vars; ++i)
            var_names.push_back(i < 4 ? defaults[i] : "x" + std::to_string(i + 1));
    }
    if (var_names.size() != vars)
        throw std::invalid_argument("variable name count mismatch");

    const auto monos = monomials_below(vars, order);
    std::map<std::vector<unsigned>, std::size_t, GradedLex> position;
    for (std::size_t i = 0; i < monos.size(); ++i)
        position.emplace(monos[i], i);

    auto to_row = [&](const Polynomial& p) {
        Row r(monos.size());
        for (const auto& [exps, c] : p.terms())
            r[position.at(exps)] = c;
        return r;
    };

    RowSpan rows;
    for (const auto& rel : relations) {
        if (rel.var_count() != vars)
            throw std::invalid_argument("relation variable count mismatch");
        if (rel.constant_term() != 0)
            throw MathError("relation has nonzero constant term; quotient would not be local",
                            rel.to_string(var_names));
        for (const auto& m : monos) {
            Polynomial prod = (Polynomial::monomial(vars, m, 1) * rel).truncated_below(order);
            if (!prod.is_zero())
                rows.push_back(to_row(prod));
        }
    }
    RowSpan echelon = row_echelon_basis(rows, monos.size());

    std::vector<bool> is_pivot(monos.size(), false);
    for (const Row& r : echelon) {
        std::size_t p = 0;
        while (p < r.size() && r[p] == 0)
            ++p;
        is_pivot[p] = true;
    }

    std::vector<std::size_t> standard; // positions of standard monomials
    for (std::size_t i = 0; i < monos.size(); ++i)
        if (!is_pivot[i])
            standard.push_back(i);

    // Reduce an arbitrary coordinate vector over the monomial space modulo
    // the relation span, then read off standard-monomial coordinates.
    auto reduce = [&](Row v) {
        for (const Row& b : echelon) {
            std::size_t p = 0;
            while (p < b.size() && b[p] == 0)
                ++p;
            if (v[p] == 0)
                continue;
            Rational f = v[p];
            for (std::size_t j = p; j < v.size(); ++j)
                v[j] -= f * b[j];
        }
        AlgElement coords(standard.size());
        for (std::size_t s = 0; s < standard.size(); ++s)
            coords[s] = v[standard[s]];
        return coords;
    };

    const std::size_t n = standard.size();
    std::vector<std::string> labels(n);
    std::vector<std::vector<unsigned>> monomials(n);
    for (std::size_t s = 0; s < n; ++s) {
        monomials[s] = monos[standard[s]];
        labels[s] = monomial_label(monomials[s], var_names);
    }

    std::vector<std::vector<AlgElement>> products(n, std::vector<AlgElement>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<unsigned> exps(vars);
            for (unsigned v = 0; v < vars; ++v)
                exps[v] = monomials[i][v] + monomials[j][v];
            Row vec(monos.size());
            if (exponent_degree(exps) < order)
                vec[position.at(exps)] = 1;
            products[i][j] = reduce(std::move(vec));
        }

    ArtinianAlgebra out(std::move(labels), std::move(products));
    out.monomials_ = std::move(monomials);
    out.var_names_ = std::move(var_names);
    return out;
}

std::vector<std::string> ArtinianAlgebra::validate() const {
    std::vector<std::string> report;
    const std::size_t n = dim();

    for (std::size_t j = 0; j < n; ++j) {
        if (prod_[0][j] != basis_element(j))
            report.push_back("unit law fails on 1*" + labels_[j]);
        if (prod_[j][0] != basis_element(j))
            report.push_back("unit law fails on " + labels_[j] + "*1");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (prod_[i][j] != prod_[j][i])
                report.push_back("commutativity fails on (" + labels_[i] + "," + labels_[j] + ")");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                if (mul(prod_[i][j], basis_element(l)) != mul(basis_element(i), prod_[j][l])) {
                    report.push_back("associativity fails on (" + labels_[i] + "," + labels_[j] +
                                     "," + labels_[l] + ")");
                }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            if (prod_[i][j][0] != 0)
                report.push_back("augmentation ideal not closed: " + labels_[i] + "*" + labels_[j]);

    // m^n = 0: iterate spans of products with the augmentation ideal.
    RowSpan power;
    for (std::size_t i = 1; i < n; ++i)
        power.push_back(basis_element(i));
    power = row_echelon_basis(power, n);
    for (std::size_t step = 1; !power.empty() && step < n; ++step) {
        RowSpan next;
        for (std::size_t i = 1; i < n; ++i)
            for (const Row& v : power)
                next.push_back(mul(basis_element(i), v));
        power = row_echelon_basis(next, n);
    }
    if (!power.empty())
        report.push_back("augmentation ideal is not nilpotent (m^dim != 0)");

    return report;
}

// ---------------------------------------------------------------------------

AlgebraMorphism::AlgebraMorphism(ArtinianAlgebra source, ArtinianAlgebra target, QMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
        throw std::invalid_argument("morphism matrix shape mismatch");
}

AlgebraMorphism AlgebraMorphism::identity(const ArtinianAlgebra& a) {
    return AlgebraMorphism(a, a, QMatrix::identity(a.dim()));
}

AlgebraMorphism AlgebraMorphism::augmentation_to_field(const ArtinianAlgebra& a) {
    QMatrix m(1, a.dim());
    m.at(0, 0) = 1;
    return AlgebraMorphism(a, ArtinianAlgebra::rational_field(), std::move(m));
}

AlgebraMorphism AlgebraMorphism::on_variables(const ArtinianAlgebra& source,
                                              const ArtinianAlgebra& target,
                                              const std::vector<AlgElement>& var_images) {
    const auto& monos = source.monomial_exponents();
    if (monos.empty())
        throw MathError("on_variables needs a truncation-presented source algebra");
    if (var_images.size() != source.variable_names().size())
        throw std::invalid_argument("one image per source variable required");

    QMatrix m(target.dim(), source.dim());
    for (std::size_t j = 0; j < monos.size(); ++j) {
        AlgElement img = target.unit();
        for (std::size_t v = 0; v < var_images.size(); ++v)
            for (unsigned e = 0; e < monos[j][v]; ++e)
                img = target.mul(img, var_images[v]);
        for (std::size_t i = 0; i < target.dim(); ++i)
            m.at(i, j) = img[i];
    }
    AlgebraMorphism f(source, target, std::move(m));
    auto report = f.validate();
    if (!report.empty())
        throw MathError("variable assignment does not define a morphism", report.front());
    return f;
}

AlgElement AlgebraMorphism::apply(const AlgElement& u) const {
    if (u.size() != source_.dim())
        throw std::invalid_argument("element not over the morphism source");
    AlgElement out(target_.dim());
    for (std::size_t i = 0; i < target_.dim(); ++i)
        for (std::size_t j = 0; j < source_.dim(); ++j)
            if (matrix_.at(i, j) != 0 && u[j] != 0)
                out[i] += matrix_.at(i, j) * u[j];
    return out;
}

AlgebraMorphism AlgebraMorphism::compose_after(const AlgebraMorphism& f) const {
    if (!(f.target_ == source_))
        throw std::invalid_argument("morphism composition: ambient mismatch");
    return AlgebraMorphism(f.source_, target_, matrix_ * f.matrix_);
}

std::vector<std::string> AlgebraMorphism::validate() const {
    std::vector<std::string> report;
    if (apply(source_.unit()) != target_.unit())
        report.push_back("unit is not sent to unit");
    for (std::size_t i = 0; i < source_.dim(); ++i)
        for (std::size_t j = i; j < source_.dim(); ++j) {
            AlgElement lhs = apply(source_.mul(source_.basis_element(i), source_.basis_element(j)));
            AlgElement rhs = target_.mul(apply(source_.basis_element(i)), apply(source_.basis_element(j)));
            if (lhs != rhs)
                report.push_back("not multiplicative on (" + source_.basis_labels()[i] + "," +
                                 source_.basis_labels()[j] + ")");
        }
    for (std::size_t j = 0; j < source_.dim(); ++j) {
        AlgElement b = source_.basis_element(j);
        if (target_.augmentation(apply(b)) != source_.augmentation(b))
            report.push_back("does not commute with augmentations on " + source_.basis_labels()[j]);
    }
    return report;
}

// ---------------------------------------------------------------------------

Ideal::Ideal(ArtinianAlgebra ambient, std::vector<AlgElement> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
    RowSpan rows;
    for (const AlgElement& g : generators_) {
        if (g.size() != ambient_.dim())
            throw std::invalid_argument("generator not over the ambient algebra");
        for (std::size_t i = 0; i < ambient_.dim(); ++i)
            rows.push_back(ambient_.mul(ambient_.basis_element(i), g));
    }
    normal_form_ = row_echelon_basis(rows, ambient_.dim());
}

bool Ideal::in_maximal() const {
    for (const Row& r : normal_form_)
        if (ambient_.augmentation(r) != 0)
            return false;
    return true;
}

bool Ideal::contains(const Ideal& other) const {
    if (!(ambient_ == other.ambient_))
        throw std::invalid_argument("ideal containment: ambient mismatch");
    return span_contains(normal_form_, other.normal_form_);
}

bool ideal_equals(const Ideal& a, const Ideal& b) {
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument("ideal comparison: ambient mismatch");
    return a.normal_form() == b.normal_form();
}

Ideal base_change(const AlgebraMorphism& f, const Ideal& ideal) {
    if (!(ideal.ambient() == f.source()))
        throw std::invalid_argument("base_change: ideal not over the morphism source");
    std::vector<AlgElement> images;
    images.reserve(ideal.generators().size());
    for (const AlgElement& g : ideal.generators())
        images.push_back(f.apply(g));
    return Ideal(f.target(), std::move(images));
}

} // namespace jumploci
