#include "cluspat/matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cluspat {

IntMatrix::IntMatrix(int n, std::vector<Int> entries) : n_(n), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("IntMatrix: entry count does not match dimension");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
    return m;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix m(n_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix m(n_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

bool IntMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& v) { return v == 0; });
}

Int IntMatrix::det() const {
    if (n_ == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n_ - 1; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n_; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n_; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n_ - 1, n_ - 1);
}

std::vector<Int> IntMatrix::column(int j) const {
    std::vector<Int> c(n_);
    for (int i = 0; i < n_; ++i) c[i] = at(i, j);
    return c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

IntMatrix diag_mul(const std::vector<Int>& d, const IntMatrix& m) {
    IntMatrix r(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) r.at(i, j) = d[i] * m.at(i, j);
    return r;
}

IntMatrix mul_diag(const IntMatrix& m, const std::vector<Int>& d) {
    IntMatrix r(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) r.at(i, j) = m.at(i, j) * d[j];
    return r;
}

Permutation::Permutation(int n) : img_(n), inv_(n) {
    std::iota(img_.begin(), img_.end(), 0);
    inv_ = img_;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    inv_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (img_[i] < 0 || img_[i] >= n || inv_[img_[i]] != -1)
            throw std::invalid_argument("Permutation: images are not a bijection");
        inv_[img_[i]] = i;
    }
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p(n);
    std::swap(p.img_[a], p.img_[b]);
    std::swap(p.inv_[a], p.inv_[b]);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img_ = inv_;
    p.inv_ = img_;
    return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
    std::vector<int> img(n());
    for (int i = 0; i < n(); ++i) img[i] = img_[o.img_[i]];
    return Permutation(std::move(img));
}

IntMatrix Permutation::matrix() const {
    IntMatrix p(n());
    for (int j = 0; j < n(); ++j) p.at(inv_[j], j) = 1;
    return p;
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::string Permutation::to_string() const {
    if (is_identity()) return "id";
    std::ostringstream os;
    std::vector<bool> seen(n(), false);
    for (int i = 0; i < n(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        os << "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            os << (first ? "" : " ") << (j + 1);
            first = false;
            j = img_[j];
        }
        os << ")";
    }
    return os.str();
}

IntMatrix permute_rows_cols(const IntMatrix& b, const Permutation& sigma) {
    IntMatrix r(b.n());
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.n(); ++j) r.at(i, j) = b.at(sigma.inv_of(i), sigma.inv_of(j));
    return r;
}

IntMatrix permute_cols(const IntMatrix& c, const Permutation& sigma) {
    IntMatrix r(c.n());
    for (int i = 0; i < c.n(); ++i)
        for (int j = 0; j < c.n(); ++j) r.at(i, j) = c.at(i, sigma.inv_of(j));
    return r;
}

std::optional<Permutation> extract_sigma(const IntMatrix& a, const IntMatrix& b) {
    const int n = a.n();
    if (n != b.n()) return std::nullopt;
    std::map<std::vector<Int>, int> bcols;
    for (int j = 0; j < n; ++j)
        if (!bcols.emplace(b.column(j), j).second) return std::nullopt; // duplicate column
    std::vector<int> img(n, -1);
    std::vector<bool> used(n, false);
    for (int j = 0; j < n; ++j) {
        auto it = bcols.find(a.column(j));
        if (it == bcols.end() || used[it->second]) return std::nullopt;
        used[it->second] = true;
        img[it->second] = j; // sigma(l) = j where b's column l matches a's column j
    }
    return Permutation(img);
}

} // namespace cluspat
