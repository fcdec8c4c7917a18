#include "exalg/matrix.hpp"

#include <cstddef>

namespace exalg {
namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct QOps {
    using T = Rat;
    static T zero() { return Rat(0); }
    static bool is_zero(const T& x) { return x == 0; }
    static T inv(const T& x) { return Rat(1) / x; }
    static void submul(T& x, const T& c, const T& y) { x -= c * y; }
    static T mul(const T& a, const T& b) { return a * b; }
    static Rat to_rat(const T& x) { return x; }
    T from_rat(const Rat& r) const { return r; }
};

struct FpOps {
    std::int64_t p;
    using T = std::int64_t;
    static T zero() { return 0; }
    static bool is_zero(const T& x) { return x == 0; }
    T inv(const T& x) const { return fp::inv(x, p); }
    void submul(T& x, const T& c, const T& y) const {
        x = fp::normalize(x - fp::mul(c, y, p), p);
    }
    T mul(const T& a, const T& b) const { return fp::mul(a, b, p); }
    static Rat to_rat(const T& x) { return Rat(static_cast<long>(x)); }
    T from_rat(const Rat& r) const { return fp::reduce(r, p); }
};

// Row echelon with unit pivots. Deterministic: pivot is the first row with a
// non-zero entry in the leftmost unfinished column.
template <typename Ops>
struct Elim {
    using T = typename Ops::T;
    Ops ops;
    std::size_t rows, cols;
    std::vector<std::vector<T>> a;
    std::vector<std::size_t> pivot_col;

    Elim(const Matrix& m, Ops o)
        : ops(o), rows(m.rows()), cols(m.cols()), a(rows) {
        for (std::size_t i = 0; i < rows; ++i) {
            a[i].reserve(cols);
            for (std::size_t j = 0; j < cols; ++j) {
                a[i].push_back(ops.from_rat(m.at(i, j)));
            }
        }
    }

    void append_column(const std::vector<Rat>& b) {
        for (std::size_t i = 0; i < rows; ++i) {
            a[i].push_back(ops.from_rat(b[i]));
        }
        ++cols;
    }

    void run() {
        std::size_t r = 0;
        std::size_t width = cols;
        for (std::size_t c = 0; c < width && r < rows; ++c) {
            std::size_t pr = npos;
            for (std::size_t i = r; i < rows; ++i) {
                if (!Ops::is_zero(a[i][c])) { pr = i; break; }
            }
            if (pr == npos) continue;
            std::swap(a[r], a[pr]);
            T s = ops.inv(a[r][c]);
            for (std::size_t j = c; j < width; ++j) a[r][j] = ops.mul(a[r][j], s);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == r || Ops::is_zero(a[i][c])) continue;
                T f = a[i][c];
                for (std::size_t j = c; j < width; ++j) {
                    ops.submul(a[i][j], f, a[r][j]);
                }
            }
            pivot_col.push_back(c);
            ++r;
        }
    }
};

template <typename Ops>
std::vector<std::vector<Rat>> nullspace_impl(const Matrix& m, Ops ops) {
    Elim<Ops> e(m, ops);
    e.run();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[fc] = 1;
        for (std::size_t k = 0; k < e.pivot_col.size(); ++k) {
            // row k reads x_pc + sum coeff * x_free = 0
            auto coeff = e.a[k][fc];
            if (!Ops::is_zero(coeff)) {
                typename Ops::T neg = Ops::zero();
                ops.submul(neg, coeff, e.a[k][e.pivot_col[k]]);
                v[e.pivot_col[k]] = Ops::to_rat(neg);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename Ops>
std::optional<std::vector<Rat>> solve_impl(const Matrix& m,
                                           const std::vector<Rat>& b, Ops ops) {
    Elim<Ops> e(m, ops);
    e.append_column(b);
    e.run();
    std::size_t bc = m.cols();
    for (std::size_t c : e.pivot_col) {
        if (c == bc) return std::nullopt;  // pivot in the constant column
    }
    std::vector<Rat> x(m.cols(), Rat(0));
    for (std::size_t k = 0; k < e.pivot_col.size(); ++k) {
        x[e.pivot_col[k]] = Ops::to_rat(e.a[k][bc]);
    }
    return x;
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) {
            throw std::invalid_argument("ragged rows");
        }
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::size_t rank(const Matrix& m, const FieldSpec& f) {
    if (f.is_rationals()) {
        Elim<QOps> e(m, QOps{});
        e.run();
        return e.pivot_col.size();
    }
    Elim<FpOps> e(m, FpOps{f.p});
    e.run();
    return e.pivot_col.size();
}

std::vector<std::vector<Rat>> nullspace_basis(const Matrix& m,
                                              const FieldSpec& f) {
    if (f.is_rationals()) return nullspace_impl(m, QOps{});
    return nullspace_impl(m, FpOps{f.p});
}

std::optional<std::vector<Rat>> solve(const Matrix& m,
                                      const std::vector<Rat>& b,
                                      const FieldSpec& f) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
    if (f.is_rationals()) return solve_impl(m, b, QOps{});
    return solve_impl(m, b, FpOps{f.p});
}

std::vector<Rat> RowSpace::reduce(std::vector<Rat> v) const {
    if (v.size() != cols_) throw std::invalid_argument("RowSpace: size mismatch");
    bool rational = field_.is_rationals();
    if (!rational) {
        for (auto& x : v) x = Rat(static_cast<long>(fp::reduce(x, field_.p)));
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rat& c = v[lead_[k]];
        if (c == 0) continue;
        Rat f = c;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (rows_[k][j] == 0) continue;
            v[j] -= f * rows_[k][j];
            if (!rational) {
                v[j] = Rat(static_cast<long>(fp::reduce(v[j], field_.p)));
            }
        }
    }
    bool all_zero = true;
    for (const auto& x : v) {
        if (x != 0) { all_zero = false; break; }
    }
    if (all_zero) return {};
    return v;
}

bool RowSpace::insert(std::vector<Rat> v) {
    auto r = reduce(std::move(v));
    if (r.empty()) return false;
    std::size_t lead = 0;
    while (r[lead] == 0) ++lead;
    Rat s = Rat(1) / r[lead];
    for (auto& x : r) {
        x *= s;
        if (!field_.is_rationals()) {
            x = Rat(static_cast<long>(fp::reduce(x, field_.p)));
        }
    }
    rows_.push_back(std::move(r));
    lead_.push_back(lead);
    return true;
}

}  // namespace exalg
