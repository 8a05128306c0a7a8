#pragma once

// Dense matrices over GF(q) with exact elimination-based kernels: rank,
// RREF, linear solve with witness and nullspace, column-independence tests,
// and the Vandermonde builder the code constructions are made of.
//
// Elimination is deterministic: scanning columns left to right, the pivot is
// always the first row (lowest index) with a nonzero entry, and nullspace
// bases are emitted in ascending free-column order with a 1 in the free
// coordinate.  Empty matrices (zero rows and/or zero columns) are legal and
// behave as rank 0.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrc/galois.hpp"

namespace lrc {

class MatrixGF {
public:
    MatrixGF(Field f, std::size_t rows, std::size_t cols)
        : f_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
        if (!f_.valid()) throw std::invalid_argument("matrix: empty field handle");
    }

    // Rows i = 0..num_rows-1 of scale_j * points_j^(first_power + i).
    // Points must be distinct; scale (if given) matches points in length.
    static MatrixGF vandermonde(const Field& f, const std::vector<std::uint32_t>& points,
                                std::uint64_t first_power, std::size_t num_rows,
                                const std::vector<std::uint32_t>* scale = nullptr) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i] >= f.q()) throw std::invalid_argument("vandermonde: point out of range");
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j])
                    throw std::invalid_argument("vandermonde: repeated point " + std::to_string(points[i]));
        }
        if (scale && scale->size() != points.size())
            throw std::invalid_argument("vandermonde: scale length must match points");
        MatrixGF m(f, num_rows, points.size());
        for (std::size_t j = 0; j < points.size(); ++j) {
            std::uint32_t v = f.pow_v(points[j], first_power);
            if (scale) v = f.mul_v(v, (*scale)[j]);
            for (std::size_t i = 0; i < num_rows; ++i) {
                m.a_[i * m.cols_ + j] = v;
                v = f.mul_v(v, points[j]);
            }
        }
        return m;
    }

    static MatrixGF vandermonde(const Field& f, const std::vector<FieldElement>& points,
                                std::uint64_t first_power, std::size_t num_rows,
                                const std::vector<FieldElement>* scale = nullptr) {
        std::vector<std::uint32_t> pv, sv;
        for (const auto& e : points) pv.push_back(f.check(e));
        if (scale)
            for (const auto& e : *scale) sv.push_back(f.check(e));
        return vandermonde(f, pv, first_power, num_rows, scale ? &sv : nullptr);
    }

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement at(std::size_t i, std::size_t j) const { return FieldElement(f_, vget(i, j)); }
    void set(std::size_t i, std::size_t j, const FieldElement& e) { vset(i, j, f_.check(e)); }

    std::uint32_t vget(std::size_t i, std::size_t j) const {
        bounds(i, j);
        return a_[i * cols_ + j];
    }
    void vset(std::size_t i, std::size_t j, std::uint32_t v) {
        bounds(i, j);
        if (v >= f_.q()) throw std::invalid_argument("matrix: value out of field range");
        a_[i * cols_ + j] = v;
    }

    // Copy `m` into this matrix with its top-left corner at (r0, c0).
    void paste(std::size_t r0, std::size_t c0, const MatrixGF& m) {
        if (!f_.same_as(m.f_)) throw std::invalid_argument("matrix: field mismatch in paste");
        if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw std::invalid_argument("matrix: paste out of bounds");
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) a_[(r0 + i) * cols_ + (c0 + j)] = m.a_[i * m.cols_ + j];
    }

    MatrixGF select_columns(const std::vector<std::size_t>& idx) const {
        require_sorted(idx);
        MatrixGF out(f_, rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= cols_) throw std::invalid_argument("matrix: column index out of range");
            for (std::size_t i = 0; i < rows_; ++i) out.a_[i * idx.size() + j] = a_[i * cols_ + idx[j]];
        }
        return out;
    }

    MatrixGF select_rows(std::size_t r0, std::size_t count) const {
        if (r0 + count > rows_) throw std::invalid_argument("matrix: row range out of bounds");
        MatrixGF out(f_, count, cols_);
        std::copy(a_.begin() + r0 * cols_, a_.begin() + (r0 + count) * cols_, out.a_.begin());
        return out;
    }

    MatrixGF transpose() const {
        MatrixGF out(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.a_[j * rows_ + i] = a_[i * cols_ + j];
        return out;
    }

    MatrixGF mul(const MatrixGF& o) const {
        if (!f_.same_as(o.f_)) throw std::invalid_argument("matrix: field mismatch in mul");
        if (cols_ != o.rows_) throw std::invalid_argument("matrix: shape mismatch in mul");
        MatrixGF out(f_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t t = 0; t < cols_; ++t) {
                const std::uint32_t v = a_[i * cols_ + t];
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out.a_[i * o.cols_ + j] =
                        f_.add_v(out.a_[i * o.cols_ + j], f_.mul_v(v, o.a_[t * o.cols_ + j]));
            }
        return out;
    }

    std::vector<std::uint32_t> mul_vec(const std::vector<std::uint32_t>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix: vector length mismatch");
        std::vector<std::uint32_t> out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (a_[i * cols_ + j] && x[j]) out[i] = f_.add_v(out[i], f_.mul_v(a_[i * cols_ + j], x[j]));
        return out;
    }

    bool is_zero() const {
        for (std::uint32_t v : a_)
            if (v) return false;
        return true;
    }

    std::size_t rank() const {
        MatrixGF tmp(*this);
        return tmp.forward_eliminate();
    }

    // True iff the selected columns (strictly increasing indices) are
    // linearly independent.  The empty selection is independent.
    bool columns_independent(const std::vector<std::size_t>& idx) const {
        if (idx.empty()) return true;
        if (idx.size() > rows_) return false;
        return select_columns(idx).rank() == idx.size();
    }

    struct Rref;
    // Reduced row echelon form with the pivot column list.
    inline Rref rref() const;

    // Basis of {x : Mx = 0} as rows, one per free column in ascending order,
    // each with a 1 in its free coordinate.
    inline MatrixGF nullspace() const;

    enum class SolveKind { unique, none, underdetermined };
    struct SolveResult;
    // Solve Mx = rhs exactly.
    inline SolveResult solve(const std::vector<std::uint32_t>& rhs) const;

    // Aligned decimal grid, one matrix row per line.
    std::string to_text() const {
        std::size_t width = 1;
        for (std::uint32_t v : a_) width = std::max(width, std::to_string(v).size());
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::string s = std::to_string(a_[i * cols_ + j]);
                out.append(width - s.size(), ' ');
                out += s;
                if (j + 1 < cols_) out += ' ';
            }
            out += '\n';
        }
        return out;
    }

    bool operator==(const MatrixGF& o) const {
        return f_.same_as(o.f_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    void bounds(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::invalid_argument("matrix: index out of range");
    }
    static void require_sorted(const std::vector<std::size_t>& idx) {
        for (std::size_t i = 1; i < idx.size(); ++i)
            if (idx[i] <= idx[i - 1])
                throw std::invalid_argument("matrix: column subsets must be strictly increasing index lists");
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a_[a * cols_ + j], a_[b * cols_ + j]);
    }
    void scale_row(std::size_t r, std::uint32_t s) {
        for (std::size_t j = 0; j < cols_; ++j) a_[r * cols_ + j] = f_.mul_v(a_[r * cols_ + j], s);
    }
    void add_scaled_row(std::size_t dst, std::size_t src, std::uint32_t s) {
        for (std::size_t j = 0; j < cols_; ++j)
            a_[dst * cols_ + j] = f_.add_v(a_[dst * cols_ + j], f_.mul_v(s, a_[src * cols_ + j]));
    }

    // Row echelon without normalization; returns the rank.  First nonzero
    // row below the cursor is always the pivot.
    std::size_t forward_eliminate() {
        std::size_t pr = 0;
        for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
            std::size_t sel = pr;
            while (sel < rows_ && a_[sel * cols_ + c] == 0) ++sel;
            if (sel == rows_) continue;
            swap_rows(pr, sel);
            const std::uint32_t pinv = f_.inv_v(a_[pr * cols_ + c]);
            for (std::size_t r = pr + 1; r < rows_; ++r) {
                const std::uint32_t v = a_[r * cols_ + c];
                if (v) add_scaled_row(r, pr, f_.neg_v(f_.mul_v(v, pinv)));
            }
            ++pr;
        }
        return pr;
    }

    Field f_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

struct MatrixGF::Rref {
    MatrixGF mat;
    std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

struct MatrixGF::SolveResult {
    SolveKind kind;
    std::vector<std::uint32_t> witness;  // one solution; empty when kind == none
    MatrixGF nullspace;                  // basis rows; empty when kind == unique
};

inline MatrixGF::Rref MatrixGF::rref() const {
    Rref out{*this, {}};
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols_ && pr < rows_; ++c) {
        std::size_t sel = pr;
        while (sel < rows_ && out.mat.a_[sel * cols_ + c] == 0) ++sel;
        if (sel == rows_) continue;
        out.mat.swap_rows(pr, sel);
        const std::uint32_t inv = f_.inv_v(out.mat.a_[pr * cols_ + c]);
        out.mat.scale_row(pr, inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr) continue;
            const std::uint32_t v = out.mat.a_[r * cols_ + c];
            if (v) out.mat.add_scaled_row(r, pr, f_.neg_v(v));
        }
        out.pivots.push_back(c);
        ++pr;
    }
    return out;
}

inline MatrixGF MatrixGF::nullspace() const {
    Rref r = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    MatrixGF basis(f_, cols_ - r.pivots.size(), cols_);
    std::size_t row = 0;
    for (std::size_t fcol = 0; fcol < cols_; ++fcol) {
        if (is_pivot[fcol]) continue;
        basis.a_[row * cols_ + fcol] = 1;
        for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
            basis.a_[row * cols_ + r.pivots[pi]] = f_.neg_v(r.mat.a_[pi * cols_ + fcol]);
        ++row;
    }
    return basis;
}

inline MatrixGF::SolveResult MatrixGF::solve(const std::vector<std::uint32_t>& rhs) const {
    if (rhs.size() != rows_) throw std::invalid_argument("matrix: rhs length mismatch");
    MatrixGF aug(f_, rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.a_[i * (cols_ + 1) + j] = a_[i * cols_ + j];
        if (rhs[i] >= f_.q()) throw std::invalid_argument("matrix: rhs value out of field range");
        aug.a_[i * (cols_ + 1) + cols_] = rhs[i];
    }
    Rref r = aug.rref();
    for (std::size_t c : r.pivots)
        if (c == cols_) return SolveResult{SolveKind::none, {}, MatrixGF(f_, 0, cols_)};
    std::vector<std::uint32_t> witness(cols_, 0);
    for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
        witness[r.pivots[pi]] = r.mat.a_[pi * (cols_ + 1) + cols_];
    if (r.pivots.size() == cols_)
        return SolveResult{SolveKind::unique, std::move(witness), MatrixGF(f_, 0, cols_)};
    return SolveResult{SolveKind::underdetermined, std::move(witness), nullspace()};
}

using SolveKind = MatrixGF::SolveKind;
using SolveResult = MatrixGF::SolveResult;

}  // namespace lrc
