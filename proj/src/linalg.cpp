#include "augcat/linalg.hpp"

namespace augcat {

GfMatrix GfMatrix::multiplied_by(const GfMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw DomainError("matrix dimension mismatch in multiplication");
    GfMatrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElem& aik = at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += aik * rhs.at(k, j);
        }
    }
    return out;
}

std::size_t GfMatrix::rank() const
{
    GfMatrix w = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w.cols_ && r < w.rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < w.rows_ && w.at(pivot, c).is_zero())
            ++pivot;
        if (pivot == w.rows_)
            continue;
        for (std::size_t j = 0; j < w.cols_; ++j)
            std::swap(w.at(r, j), w.at(pivot, j));
        const FieldElem inv = w.at(r, c).inverse();
        for (std::size_t j = c; j < w.cols_; ++j)
            w.at(r, j) = inv * w.at(r, j);
        for (std::size_t i = 0; i < w.rows_; ++i) {
            if (i == r || w.at(i, c).is_zero())
                continue;
            const FieldElem f = w.at(i, c);
            for (std::size_t j = c; j < w.cols_; ++j)
                w.at(i, j) += f * w.at(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<std::vector<FieldElem>> GfMatrix::solve(std::vector<FieldElem> rhs) const
{
    if (rhs.size() != rows_)
        throw DomainError("right-hand side size mismatch");
    GfMatrix w = *this;
    std::vector<int> pivot_col(rows_, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pivot = r;
        while (pivot < rows_ && w.at(pivot, c).is_zero())
            ++pivot;
        if (pivot == rows_)
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(w.at(r, j), w.at(pivot, j));
        std::swap(rhs[r], rhs[pivot]);
        const FieldElem inv = w.at(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j)
            w.at(r, j) = inv * w.at(r, j);
        rhs[r] = inv * rhs[r];
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || w.at(i, c).is_zero())
                continue;
            const FieldElem f = w.at(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                w.at(i, j) += f * w.at(r, j);
            rhs[i] += f * rhs[r];
        }
        pivot_col[r] = static_cast<int>(c);
        ++r;
    }
    for (std::size_t i = r; i < rows_; ++i)
        if (!rhs[i].is_zero())
            return std::nullopt;
    std::vector<FieldElem> x(cols_, field_.zero());
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = rhs[i];  // free variables stay zero
    return x;
}

}  // namespace augcat
