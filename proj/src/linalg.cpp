#include "canring/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace canring {

ZVec to_primitive(const QVec& v) {
    mpz_class lcm = 1;
    for (const Rational& x : v)
        if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.den().get_mpz_t());
    ZVec z(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) z[i] = v[i].num() * (lcm / v[i].den());
    strip_content(z);
    return z;
}

void strip_content(ZVec& v) {
    mpz_class g = 0;
    for (const mpz_class& x : v) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (mpz_class& x : v)
        if (x != 0) x /= g;
}

size_t IntEchelon::reduce(ZVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntEchelon: arity mismatch");
    size_t lead = 0;
    auto advance = [&]() {
        while (lead < cols_ && v[lead] == 0) ++lead;
    };
    advance();
    for (const auto& [p, row] : rows_) {
        if (lead >= cols_) break;
        if (p < lead) continue;
        if (p > lead) break;  // rows sorted; no pivot at lead
        // v <- (a/g)*v - (b/g)*row with a = row[p], b = v[p].
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), v[p].get_mpz_t(), row[p].get_mpz_t());
        mpz_class a = row[p] / g, b = v[p] / g;
        for (size_t c = lead; c < cols_; ++c) {
            v[c] = v[c] * a - row[c] * b;
        }
        strip_content(v);
        advance();
    }
    // A later row may still collide when pivots interleave; loop until stable.
    bool changed = true;
    while (changed && lead < cols_) {
        changed = false;
        for (const auto& [p, row] : rows_) {
            if (p == lead) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), v[p].get_mpz_t(), row[p].get_mpz_t());
                mpz_class a = row[p] / g, b = v[p] / g;
                for (size_t c = lead; c < cols_; ++c) v[c] = v[c] * a - row[c] * b;
                strip_content(v);
                advance();
                changed = true;
                break;
            }
        }
    }
    return lead;
}

bool IntEchelon::add_row(ZVec v) {
    size_t p = reduce(v);
    if (p >= cols_) return false;
    if (sgn(v[p]) < 0)
        for (mpz_class& x : v) x = -x;
    auto it = std::lower_bound(rows_.begin(), rows_.end(), p,
                               [](const auto& r, size_t key) { return r.first < key; });
    rows_.insert(it, {p, std::move(v)});
    return true;
}

bool IntEchelon::contains(ZVec v) const { return reduce(v) >= cols_; }

std::vector<size_t> IntEchelon::pivot_columns() const {
    std::vector<size_t> p;
    p.reserve(rows_.size());
    for (const auto& [col, row] : rows_) p.push_back(col);
    return p;
}

uint32_t ModEchelon::inv(uint32_t a) const {
    // Extended Euclid; p_ is prime and a is nonzero mod p_.
    int64_t t = 0, nt = 1, r = p_, nr = a % p_;
    while (nr != 0) {
        int64_t q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (t < 0) t += p_;
    return static_cast<uint32_t>(t);
}

bool ModEchelon::add_row(SparseRow row) {
    const uint64_t p = p_;
    SparseRow tmp;
    while (!row.empty()) {
        uint32_t lead = row.front().first;
        if (lead >= cols_) throw std::invalid_argument("ModEchelon: column out of range");
        long ri = pivot_row_[lead];
        if (ri < 0) {
            // Normalize so the leading value is 1 and store.
            uint64_t s = inv(row.front().second);
            for (auto& [c, v] : row) v = static_cast<uint32_t>((v * s) % p);
            pivot_row_[lead] = static_cast<long>(rows_.size());
            rows_.push_back(std::move(row));
            ++rank_;
            return true;
        }
        // row -= row[lead] * rows_[ri]  (pivot row has leading value 1).
        const SparseRow& pr = rows_[static_cast<size_t>(ri)];
        uint64_t f = row.front().second;  // multiplier
        tmp.clear();
        tmp.reserve(row.size() + pr.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < pr.size()) {
            ++ops_;
            if (j >= pr.size() || (i < row.size() && row[i].first < pr[j].first)) {
                tmp.push_back(row[i++]);
            } else if (i >= row.size() || pr[j].first < row[i].first) {
                uint64_t v = (p - (pr[j].second * f) % p) % p;
                if (v != 0) tmp.emplace_back(pr[j].first, static_cast<uint32_t>(v));
                ++j;
            } else {
                uint64_t v = (row[i].second + p - (pr[j].second * f) % p) % p;
                if (v != 0) tmp.emplace_back(row[i].first, static_cast<uint32_t>(v));
                ++i;
                ++j;
            }
        }
        row.swap(tmp);
    }
    return false;
}

bool ModEchelon::add_row_rational(const std::vector<std::pair<size_t, Rational>>& row, bool& grew) {
    const uint64_t p = p_;
    SparseRow r;
    r.reserve(row.size());
    for (const auto& [c, x] : row) {
        if (x.is_zero()) continue;
        uint64_t den = mpz_fdiv_ui(x.den().get_mpz_t(), p_);
        if (den == 0) {
            grew = false;
            return false;
        }
        uint64_t num = mpz_fdiv_ui(x.num().get_mpz_t(), p_);
        uint64_t v = (num * inv(static_cast<uint32_t>(den))) % p;
        if (v != 0) r.emplace_back(static_cast<uint32_t>(c), static_cast<uint32_t>(v));
    }
    grew = add_row(std::move(r));
    return true;
}

size_t rank(const QMat& rows) {
    if (rows.empty()) return 0;
    IntEchelon e(rows[0].size());
    size_t r = 0;
    for (const QVec& row : rows) r += e.add_row(row) ? 1 : 0;
    return r;
}

bool span_contains(const QMat& rows, const QVec& v) {
    IntEchelon e(v.size());
    for (const QVec& row : rows) e.add_row(row);
    return e.contains(v);
}

QMat kernel_basis(const QMat& m, size_t cols) {
    // Reduced row echelon over Q; kernel extraction is then immediate. The
    // matrices passed here are desk-scale, so plain rational RREF is fine.
    QMat rr;
    for (const QVec& row : m) {
        if (row.size() != cols) throw std::invalid_argument("kernel_basis: ragged matrix");
        QVec v = row;
        for (const QVec& r : rr) {
            size_t p = 0;
            while (p < cols && r[p].is_zero()) ++p;
            if (p < cols && !v[p].is_zero()) {
                Rational f = v[p] / r[p];
                for (size_t c = 0; c < cols; ++c) v[c] -= f * r[c];
            }
        }
        size_t lead = 0;
        while (lead < cols && v[lead].is_zero()) ++lead;
        if (lead == cols) continue;
        Rational inv = Rational(1) / v[lead];
        for (size_t c = 0; c < cols; ++c) v[c] *= inv;
        // Reduce earlier rows so rr stays fully reduced.
        for (QVec& r : rr) {
            if (!r[lead].is_zero()) {
                Rational f = r[lead];
                for (size_t c = 0; c < cols; ++c) r[c] -= f * v[c];
            }
        }
        rr.push_back(std::move(v));
    }
    std::sort(rr.begin(), rr.end(), [&](const QVec& a, const QVec& b) {
        size_t pa = 0, pb = 0;
        while (pa < cols && a[pa].is_zero()) ++pa;
        while (pb < cols && b[pb].is_zero()) ++pb;
        return pa < pb;
    });

    std::vector<size_t> piv;
    std::vector<bool> pivot_flag(cols, false);
    for (const QVec& r : rr) {
        size_t p = 0;
        while (p < cols && r[p].is_zero()) ++p;
        piv.push_back(p);
        pivot_flag[p] = true;
    }

    QMat basis;
    for (size_t f = 0; f < cols; ++f) {
        if (pivot_flag[f]) continue;
        QVec x(cols, Rational(0));
        x[f] = Rational(1);
        for (size_t ri = 0; ri < rr.size(); ++ri) {
            // pivot coefficient is 1 in RREF
            x[piv[ri]] = -rr[ri][f];
        }
        // Present as a primitive integer vector.
        ZVec z = to_primitive(x);
        QVec out(cols);
        for (size_t c = 0; c < cols; ++c) out[c] = Rational(z[c]);
        basis.push_back(std::move(out));
    }
    return basis;
}

std::optional<QVec> solve_square(const QMat& a, const QVec& b) {
    size_t n = b.size();
    if (a.size() != n) return std::nullopt;
    QMat aug(n, QVec(n + 1));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) return std::nullopt;
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    size_t row = 0;
    std::vector<size_t> pivot_of_col(n, SIZE_MAX);
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t sel = SIZE_MAX;
        for (size_t r = row; r < n; ++r)
            if (!aug[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::swap(aug[row], aug[sel]);
        Rational inv = Rational(1) / aug[row][col];
        for (size_t c = col; c <= n; ++c) aug[row][c] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == row || aug[r][col].is_zero()) continue;
            Rational f = aug[r][col];
            for (size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[row][c];
        }
        pivot_of_col[col] = row;
        ++row;
    }
    // Inconsistent when a zero row has nonzero rhs.
    for (size_t r = row; r < n; ++r)
        if (!aug[r][n].is_zero()) return std::nullopt;
    QVec x(n, Rational(0));
    for (size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] == SIZE_MAX) {
            // singular: underdetermined; treat as failure for square solves
            return std::nullopt;
        }
        x[col] = aug[pivot_of_col[col]][n];
    }
    return x;
}

}  // namespace canring
