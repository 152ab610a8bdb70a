#pragma once

#include <cstddef>
#include <vector>

#include "bnhilb/errors.hpp"
#include "bnhilb/field.hpp"

namespace bnhilb {

// Dense matrix over an exact field.  Storage is row-major; indices are
// 0-based in code, pivot columns are reported 1-based.
template <FieldOps F>
class Matrix {
  public:
    using Elem = typename F::Elem;

    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const F& f)
        : rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const std::vector<Elem>& row) {
        if (rows_ == 0 && cols_ == 0) cols_ = row.size();
        if (row.size() != cols_) throw domain_error("matrix: appended row has wrong width");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Elem> data_;
};

template <FieldOps F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;  // 1-based column indices, strictly increasing
};

// Gauss-Jordan without column swaps: pivot columns scanned left to right, so
// pivots[i-1] is the least c with rank(first c columns) = i.
template <FieldOps F>
RrefResult<F> rref_pivots(const F& f, Matrix<F> m) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && f.is_zero(m.at(sel, c))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pr, j));
        const auto piv_inv = f.inv(m.at(pr, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(pr, j) = f.mul(m.at(pr, j), piv_inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pr || f.is_zero(m.at(i, c))) continue;
            const auto factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(pr, j)));
        }
        pivots.push_back(c + 1);
        ++pr;
    }
    return {std::move(m), std::move(pivots)};
}

template <FieldOps F>
std::size_t rank(const F& f, const Matrix<F>& m) {
    return rref_pivots(f, m).pivots.size();
}

}  // namespace bnhilb
