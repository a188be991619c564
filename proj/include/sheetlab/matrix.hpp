#pragma once

#include <initializer_list>
#include <vector>

#include "errors.hpp"

namespace sheetlab {

/// Dense square matrix over an exact field K.
template <class K>
class Mat {
public:
    Mat() : n_(0) {}
    explicit Mat(int n) : n_(n), e_(n * n, K(0)) {}
    Mat(std::initializer_list<std::initializer_list<K>> rows) {
        n_ = static_cast<int>(rows.size());
        e_.reserve(n_ * n_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n_) throw error("Mat: ragged initializer");
            for (const auto& v : r) e_.push_back(v);
        }
    }

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int size() const { return n_; }
    K& operator()(int i, int j) { return e_[i * n_ + j]; }
    const K& operator()(int i, int j) const { return e_[i * n_ + j]; }

    friend bool operator==(const Mat& x, const Mat& y) { return x.n_ == y.n_ && x.e_ == y.e_; }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.n_ != y.n_) throw error("Mat: size mismatch");
        Mat r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const K& v = x(i, k);
                if (v == K(0)) continue;
                for (int j = 0; j < x.n_; ++j) r(i, j) += v * y(k, j);
            }
        return r;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.n_ != y.n_) throw error("Mat: size mismatch");
        Mat r = x;
        for (int i = 0; i < x.n_ * x.n_; ++i) r.e_[i] += y.e_[i];
        return r;
    }

    friend Mat operator-(const Mat& x, const Mat& y) {
        if (x.n_ != y.n_) throw error("Mat: size mismatch");
        Mat r = x;
        for (int i = 0; i < x.n_ * x.n_; ++i) r.e_[i] -= y.e_[i];
        return r;
    }

    Mat operator*(const K& s) const {
        Mat r = *this;
        for (auto& v : r.e_) v *= s;
        return r;
    }

    Mat transpose() const {
        Mat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != n_) throw error("Mat: vector size mismatch");
        std::vector<K> r(n_, K(0));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    K det() const {
        Mat a = *this;
        K result(1);
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = col; r < n_; ++r)
                if (!(a(r, col) == K(0))) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return K(0);
            if (pivot != col) {
                for (int j = 0; j < n_; ++j) std::swap(a(pivot, j), a(col, j));
                result = K(0) - result;
            }
            result *= a(col, col);
            K inv = K(1) / a(col, col);
            for (int r = col + 1; r < n_; ++r) {
                K f = a(r, col) * inv;
                if (f == K(0)) continue;
                for (int j = col; j < n_; ++j) a(r, j) -= f * a(col, j);
            }
        }
        return result;
    }

    Mat inverse() const {
        Mat a = *this, inv = identity(n_);
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = col; r < n_; ++r)
                if (!(a(r, col) == K(0))) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) throw degenerate_map_error("Mat: singular matrix");
            if (pivot != col)
                for (int j = 0; j < n_; ++j) {
                    std::swap(a(pivot, j), a(col, j));
                    std::swap(inv(pivot, j), inv(col, j));
                }
            K scale = K(1) / a(col, col);
            for (int j = 0; j < n_; ++j) {
                a(col, j) *= scale;
                inv(col, j) *= scale;
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col) continue;
                K f = a(r, col);
                if (f == K(0)) continue;
                for (int j = 0; j < n_; ++j) {
                    a(r, j) -= f * a(col, j);
                    inv(r, j) -= f * inv(col, j);
                }
            }
        }
        return inv;
    }

    /// Basis of the null space, one vector per non-pivot column.
    std::vector<std::vector<K>> kernel() const {
        Mat a = *this;
        std::vector<int> pivot_col;
        int row = 0;
        for (int col = 0; col < n_ && row < n_; ++col) {
            int pivot = -1;
            for (int r = row; r < n_; ++r)
                if (!(a(r, col) == K(0))) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            if (pivot != row)
                for (int j = 0; j < n_; ++j) std::swap(a(pivot, j), a(row, j));
            K scale = K(1) / a(row, col);
            for (int j = 0; j < n_; ++j) a(row, j) *= scale;
            for (int r = 0; r < n_; ++r) {
                if (r == row) continue;
                K f = a(r, col);
                if (f == K(0)) continue;
                for (int j = 0; j < n_; ++j) a(r, j) -= f * a(row, j);
            }
            pivot_col.push_back(col);
            ++row;
        }
        std::vector<std::vector<K>> basis;
        for (int col = 0; col < n_; ++col) {
            bool is_pivot = false;
            for (int pc : pivot_col) is_pivot |= (pc == col);
            if (is_pivot) continue;
            std::vector<K> v(n_, K(0));
            v[col] = K(1);
            for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = K(0) - a(r, col);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    int n_;
    std::vector<K> e_;
};

}  // namespace sheetlab
