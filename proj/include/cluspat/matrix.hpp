#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cluspat/bigint.hpp"

namespace cluspat {

/// Square integer matrix with exact entries.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}
    IntMatrix(int n, std::vector<Int> entries);

    static IntMatrix identity(int n);
    static IntMatrix zero(int n) { return IntMatrix(n); }

    int n() const { return n_; }
    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntMatrix operator-() const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    bool is_zero() const;

    /// Exact determinant (fraction-free Bareiss elimination).
    Int det() const;

    std::vector<Int> column(int j) const;
    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<Int> e_;
};

/// Diagonal left-multiplication: diag(d) * M.
IntMatrix diag_mul(const std::vector<Int>& d, const IntMatrix& m);
/// Diagonal right-multiplication: M * diag(d).
IntMatrix mul_diag(const IntMatrix& m, const std::vector<Int>& d);

/// Bijection on {0..n-1}; sigma.of(i) is the image of i.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n);                  // identity
    explicit Permutation(std::vector<int> images);

    static Permutation transposition(int n, int a, int b);

    int n() const { return static_cast<int>(img_.size()); }
    int of(int i) const { return img_[i]; }
    int inv_of(int i) const { return inv_[i]; }
    bool is_identity() const;

    Permutation inverse() const;
    Permutation operator*(const Permutation& o) const; // (this*o)(i) = this(o(i))
    bool operator==(const Permutation& o) const { return img_ == o.img_; }

    /// Permutation matrix P_sigma with p_{ij} = [i == sigma^{-1}(j)].
    IntMatrix matrix() const;

    /// All permutations of degree n in lexicographic order.
    static std::vector<Permutation> all(int n);

    std::string to_string() const; // cycle notation, 1-based

private:
    std::vector<int> img_, inv_;
};

/// sigma B: b'_{ij} = b_{sigma^{-1}(i) sigma^{-1}(j)}  (= P^T B P).
IntMatrix permute_rows_cols(const IntMatrix& b, const Permutation& sigma);
/// sigma C: c'_{ij} = c_{i sigma^{-1}(j)}  (= C P).
IntMatrix permute_cols(const IntMatrix& c, const Permutation& sigma);

/// sigma with a = b * P_sigma (i.e. a's column j equals b's column sigma^{-1}(j)),
/// or nullopt if no such column bijection exists. Columns of b must be distinct.
std::optional<Permutation> extract_sigma(const IntMatrix& a, const IntMatrix& b);

} // namespace cluspat
