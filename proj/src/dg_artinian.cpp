#include "jumploci/dg_artinian.hpp"

#include "jumploci/errors.hpp"

#include <algorithm>

namespace jumploci {

DgArtinianAlgebra::DgArtinianAlgebra(std::vector<std::string> labels, std::vector<int> degrees,
                                     std::vector<std::vector<AlgElement>> products,
                                     std::vector<AlgElement> differential)
    : labels_(std::move(labels)), degrees_(std::move(degrees)), prod_(std::move(products)),
      diff_(std::move(differential)) {
    const std::size_t n = labels_.size();
    if (n == 0 || degrees_.size() != n || prod_.size() != n || diff_.size() != n)
        throw std::invalid_argument("dg algebra table shape mismatch");
    for (const auto& row : prod_) {
        if (row.size() != n)
            throw std::invalid_argument("dg product table shape mismatch");
        for (const auto& e : row)
            if (e.size() != n)
                throw std::invalid_argument("dg product entry length mismatch");
    }
    for (const auto& e : diff_)
        if (e.size() != n)
            throw std::invalid_argument("dg differential entry length mismatch");
    if (degrees_[0] != 0)
        throw std::invalid_argument("unit must sit in degree 0");
    for (int d : degrees_)
        if (d > 0)
            throw std::invalid_argument("dg artinian algebras live in non-positive degrees");
}

DgArtinianAlgebra DgArtinianAlgebra::from_classical(const ArtinianAlgebra& a) {
    std::vector<std::vector<AlgElement>> products(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        products[i] = a.product_row(i);
    return DgArtinianAlgebra(a.basis_labels(), std::vector<int>(a.dim(), 0), std::move(products),
                             std::vector<AlgElement>(a.dim(), AlgElement(a.dim())));
}

bool DgArtinianAlgebra::is_classical() const {
    return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 0; });
}

ArtinianAlgebra DgArtinianAlgebra::to_classical() const {
    if (!is_classical())
        throw MathError("algebra is not concentrated in degree 0");
    return ArtinianAlgebra(labels_, prod_);
}

AlgElement DgArtinianAlgebra::unit() const { return basis_element(0); }

AlgElement DgArtinianAlgebra::basis_element(std::size_t i) const {
    AlgElement e(dim());
    e.at(i) = 1;
    return e;
}

AlgElement DgArtinianAlgebra::mul(const AlgElement& u, const AlgElement& v) const {
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

AlgElement DgArtinianAlgebra::add(const AlgElement& u, const AlgElement& v) const {
    AlgElement out(u);
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] += v[i];
    return out;
}

AlgElement DgArtinianAlgebra::scale(const Rational& c, const AlgElement& u) const {
    AlgElement out(u);
    for (auto& x : out)
        x *= c;
    return out;
}

AlgElement DgArtinianAlgebra::d(const AlgElement& u) const {
    AlgElement out(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        if (u[j] == 0)
            continue;
        for (std::size_t i = 0; i < dim(); ++i)
            if (diff_[j][i] != 0)
                out[i] += u[j] * diff_[j][i];
    }
    return out;
}

bool DgArtinianAlgebra::is_zero(const AlgElement& u) const {
    return std::all_of(u.begin(), u.end(), [](const Rational& x) { return x == 0; });
}

AlgElement DgArtinianAlgebra::component(const AlgElement& u, int ring_degree) const {
    AlgElement out(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        if (degrees_[i] == ring_degree)
            out[i] = u[i];
    return out;
}

std::string DgArtinianAlgebra::element_to_string(const AlgElement& u) const {
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

std::vector<std::string> DgArtinianAlgebra::validate() const {
    std::vector<std::string> report;
    const std::size_t n = dim();

    for (std::size_t j = 0; j < n; ++j) {
        if (prod_[0][j] != basis_element(j) || prod_[j][0] != basis_element(j))
            report.push_back("unit law fails on " + labels_[j]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (prod_[i][j][l] != 0 && degrees_[l] != degrees_[i] + degrees_[j])
                    report.push_back("product not degree-homogeneous on (" + labels_[i] + "," +
                                     labels_[j] + ")");
        for (std::size_t i = 0; i < n; ++i)
            if (diff_[j][i] != 0 && degrees_[i] != degrees_[j] + 1)
                report.push_back("differential not of degree +1 on " + labels_[j]);
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational sign = (degrees_[i] * degrees_[j]) % 2 == 0 ? 1 : -1;
            AlgElement flipped = prod_[j][i];
            for (auto& x : flipped)
                x *= sign;
            if (prod_[i][j] != flipped)
                report.push_back("graded commutativity fails on (" + labels_[i] + "," + labels_[j] +
                                 ")");
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                if (mul(prod_[i][j], basis_element(l)) != mul(basis_element(i), prod_[j][l]))
                    report.push_back("associativity fails on (" + labels_[i] + "," + labels_[j] +
                                     "," + labels_[l] + ")");

    for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(d(diff_[j])))
            report.push_back("d^2 != 0 on " + labels_[j]);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            AlgElement lhs = d(prod_[i][j]);
            Rational sign = degrees_[i] % 2 == 0 ? 1 : -1;
            AlgElement rhs = add(mul(diff_[i], basis_element(j)),
                                 scale(sign, mul(basis_element(i), diff_[j])));
            if (lhs != rhs)
                report.push_back("graded Leibniz fails on (" + labels_[i] + "," + labels_[j] + ")");
        }

    for (std::size_t j = 0; j < n; ++j)
        if (degrees_[j] == -1 && augmentation(diff_[j]) != 0)
            report.push_back("augmentation does not kill d(A_{-1}) on " + labels_[j]);

    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            if (prod_[i][j][0] != 0)
                report.push_back("augmentation ideal not closed: " + labels_[i] + "*" + labels_[j]);

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
        report.push_back("augmentation ideal is not nilpotent");

    return report;
}

DgArtinianAlgebra::H0Result DgArtinianAlgebra::h0() const {
    const std::size_t n = dim();
    std::vector<std::size_t> deg0;
    for (std::size_t i = 0; i < n; ++i)
        if (degrees_[i] == 0)
            deg0.push_back(i);

    // span of d(A_{-1}) inside the degree-0 coordinates
    RowSpan image_rows;
    for (std::size_t j = 0; j < n; ++j) {
        if (degrees_[j] != -1)
            continue;
        Row r(deg0.size());
        for (std::size_t p = 0; p < deg0.size(); ++p)
            r[p] = diff_[j][deg0[p]];
        image_rows.push_back(std::move(r));
    }
    RowSpan image = row_echelon_basis(image_rows, deg0.size());

    std::vector<bool> is_pivot(deg0.size(), false);
    for (const Row& r : image) {
        std::size_t p = 0;
        while (p < r.size() && r[p] == 0)
            ++p;
        is_pivot[p] = true;
    }
    std::vector<std::size_t> standard; // indices into deg0
    for (std::size_t p = 0; p < deg0.size(); ++p)
        if (!is_pivot[p])
            standard.push_back(p);

    auto project_deg0 = [&](const AlgElement& u) {
        Row v(deg0.size());
        for (std::size_t p = 0; p < deg0.size(); ++p)
            v[p] = u[deg0[p]];
        for (const Row& b : image) {
            std::size_t p = 0;
            while (p < b.size() && b[p] == 0)
                ++p;
            if (v[p] == 0)
                continue;
            Rational f = v[p];
            for (std::size_t q = p; q < v.size(); ++q)
                v[q] -= f * b[q];
        }
        AlgElement coords(standard.size());
        for (std::size_t s = 0; s < standard.size(); ++s)
            coords[s] = v[standard[s]];
        return coords;
    };

    const std::size_t h = standard.size();
    std::vector<std::string> labels(h);
    for (std::size_t s = 0; s < h; ++s)
        labels[s] = labels_[deg0[standard[s]]];

    std::vector<std::vector<AlgElement>> products(h, std::vector<AlgElement>(h));
    for (std::size_t a = 0; a < h; ++a)
        for (std::size_t b = 0; b < h; ++b)
            products[a][b] = project_deg0(
                mul(basis_element(deg0[standard[a]]), basis_element(deg0[standard[b]])));

    QMatrix projection(h, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (degrees_[j] != 0)
            continue;
        AlgElement coords = project_deg0(basis_element(j));
        for (std::size_t s = 0; s < h; ++s)
            projection.at(s, j) = coords[s];
    }

    return H0Result{ArtinianAlgebra(std::move(labels), std::move(products)),
                    std::move(projection)};
}

} // namespace jumploci
