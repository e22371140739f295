#pragma once

#include <optional>
#include <vector>

#include "augcat/gf.hpp"

namespace augcat {

// Dense matrix over GF(2^m). Deterministic Gaussian elimination: pivots are
// picked as the first nonzero entry in column order, so solutions and ranks do
// not depend on anything but the input.
class GfMatrix {
public:
    GfMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero())
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    FieldElem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const FieldElem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    bool is_zero() const
    {
        for (const FieldElem& x : a_)
            if (!x.is_zero())
                return false;
        return true;
    }

    GfMatrix multiplied_by(const GfMatrix& rhs) const;

    std::size_t rank() const;

    // First solution of (*this) * x = rhs with free variables set to zero;
    // nullopt when the system is inconsistent.
    std::optional<std::vector<FieldElem>> solve(std::vector<FieldElem> rhs) const;

    bool operator==(const GfMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElem> a_;
};

}  // namespace augcat
