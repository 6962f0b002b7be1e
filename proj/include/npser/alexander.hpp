#ifndef NPSER_ALEXANDER_HPP
#define NPSER_ALEXANDER_HPP

#include <npser/diagram.hpp>
#include <npser/series.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace npser {

/// Product of r ordered cyclotomic binomials prod_i (1 - t^{N_i}) encoded by
/// the r x r matrix of its exponent rows.
struct CyclotomicMatrixForm {
    std::vector<std::vector<std::int64_t>> rows;

    std::size_t size() const { return rows.size(); }

    BinomialProduct as_product() const
    {
        BinomialProduct out;
        out.numerator = rows;
        return out;
    }

    friend bool operator==(const CyclotomicMatrixForm &, const CyclotomicMatrixForm &) = default;
};

namespace detail {

inline std::vector<std::vector<std::int64_t>> reduced_rows(const ExponentMatrix &m)
{
    // m_i = M_i / s_i; every entry of row i is divisible by s_i
    std::vector<std::vector<std::int64_t>> rows = m.entries;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (auto &v : rows[i]) {
            if (v % m.lengths[i] != 0) {
                throw DiagramError("exponent matrix row not divisible by facet length");
            }
            v /= m.lengths[i];
        }
    }
    return rows;
}

} // namespace detail

/// Alexander polynomial of the collection g_1, ..., g_r of one-segment germs
/// attached to the facets: rows m_i = M_i / s_i over
/// (1 - t^{u(x)})(1 - t^{u(y)}).
inline BinomialProduct alexander_delta(const NewtonDiagram &d)
{
    const ExponentMatrix m = exponent_matrix(d);
    BinomialProduct out;
    out.numerator = detail::reduced_rows(m);
    out.denominator = {m.ux, m.uy};
    return out;
}

/// Alexander polynomial of the multilink (g_1^{s_1}, ..., g_r^{s_r}):
/// numerator row i has components s_j * m_{ji}, i.e. column i of the reduced
/// matrix scaled componentwise by the lengths.
inline BinomialProduct alexander_multilink(const NewtonDiagram &d)
{
    const ExponentMatrix m = exponent_matrix(d);
    const auto reduced = detail::reduced_rows(m);
    const std::size_t r = m.size();
    BinomialProduct out;
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<std::int64_t> row(r);
        for (std::size_t j = 0; j < r; ++j) {
            row[j] = m.lengths[j] * reduced[j][i];
        }
        out.numerator.push_back(std::move(row));
    }
    out.denominator = {m.ux, m.uy};
    return out;
}

/// Reduced Poincare series prod_i (1 - t^{s_i m_i}): exactly the rows of the
/// exponent matrix.
inline CyclotomicMatrixForm reduced_poincare(const NewtonDiagram &d)
{
    return {exponent_matrix(d).entries};
}

/// Poincare series of the quasihomogeneous valuations:
/// 1 / ((1 - t^{u(x)})(1 - t^{u(y)})).
inline BinomialProduct quasihomogeneous_poincare(const NewtonDiagram &d)
{
    const ExponentMatrix m = exponent_matrix(d);
    BinomialProduct out;
    out.denominator = {m.ux, m.uy};
    return out;
}

/// Matrix transposition, an involution on products of r ordered binomials in
/// r variables; maps the reduced Poincare series to the multilink Alexander
/// numerator.
inline CyclotomicMatrixForm transpose_involution(const CyclotomicMatrixForm &n)
{
    const std::size_t r = n.size();
    for (const auto &row : n.rows) {
        if (row.size() != r) {
            throw std::invalid_argument("transpose_involution: matrix must be square");
        }
    }
    CyclotomicMatrixForm out;
    out.rows.assign(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            out.rows[j][i] = n.rows[i][j];
        }
    }
    return out;
}

} // namespace npser

#endif
