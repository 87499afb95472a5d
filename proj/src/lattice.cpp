#include "ramsat/lattice.hpp"

#include "ramsat/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ramsat {

Int dot(std::span<const Int> a, std::span<const Int> b) {
    check_invariant(a.size() == b.size(), "lattice.dimension_mismatch", "dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec add(std::span<const Int> a, std::span<const Int> b) {
    check_invariant(a.size() == b.size(), "lattice.dimension_mismatch", "add: size mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IntVec sub(std::span<const Int> a, std::span<const Int> b) {
    check_invariant(a.size() == b.size(), "lattice.dimension_mismatch", "sub: size mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

IntVec scale(std::span<const Int> a, Int c) {
    IntVec r(a.begin(), a.end());
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero(std::span<const Int> a) {
    return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

std::string to_string(std::span<const Int> v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int mod_floor(Int a, Int m) {
    if (m < 0) m = -m;
    Int r = a % m;
    return r < 0 ? r + m : r;
}

// ---------------- IntMatrix ----------------

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, int cols) {
    IntMatrix m(int(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r) {
        check_invariant(int(rows[r].size()) == cols, "lattice.dimension_mismatch", "from_rows: ragged input");
        for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols, int rows) {
    IntMatrix m(rows, int(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        check_invariant(int(cols[c].size()) == rows, "lattice.dimension_mismatch", "from_columns: ragged input");
        for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

IntVec IntMatrix::row(int r) const {
    return IntVec(data_.begin() + std::size_t(r) * cols_, data_.begin() + std::size_t(r + 1) * cols_);
}

IntVec IntMatrix::col(int c) const {
    IntVec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntVec IntMatrix::apply(std::span<const Int> v) const {
    check_invariant(int(v.size()) == cols_, "lattice.dimension_mismatch", "apply: size mismatch");
    IntVec out(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
        Int s = 0;
        for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    check_invariant(a.cols() == b.rows(), "lattice.dimension_mismatch", "matrix product: shape mismatch");
    IntMatrix m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            Int x = a(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols(); ++j) m(i, j) += x * b(k, j);
        }
    return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (int r = 0; r < m.rows(); ++r) {
        os << (r ? ";" : "");
        for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    }
    return os << ']';
}

// ---------------- Smith normal form ----------------

namespace {

struct Overflow {};

/// int64 that throws Overflow instead of wrapping.
struct Checked {
    Int v = 0;
    Checked() = default;
    Checked(Int x) : v(x) {}

    friend Checked operator+(Checked a, Checked b) {
        Int r;
        if (__builtin_add_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend Checked operator-(Checked a, Checked b) {
        Int r;
        if (__builtin_sub_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend Checked operator*(Checked a, Checked b) {
        Int r;
        if (__builtin_mul_overflow(a.v, b.v, &r)) throw Overflow{};
        return r;
    }
    friend Checked operator/(Checked a, Checked b) { return a.v / b.v; }
    friend Checked operator%(Checked a, Checked b) { return a.v % b.v; }
    Checked operator-() const { return Checked(0) - *this; }
    friend bool operator==(Checked a, Checked b) { return a.v == b.v; }
    friend auto operator<=>(Checked a, Checked b) { return a.v <=> b.v; }
};

Int to_int(Checked x) { return x.v; }

Int to_int(const boost::multiprecision::cpp_int& x) {
    if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
        throw Error("lattice.overflow", "Smith form entry does not fit in 64 bits");
    return static_cast<Int>(x);
}

template <class T>
struct Mat {
    int rows, cols;
    std::vector<T> d;
    Mat(int r, int c) : rows(r), cols(c), d(std::size_t(r) * c, T(0)) {}
    T& operator()(int r, int c) { return d[std::size_t(r) * cols + c]; }
    const T& operator()(int r, int c) const { return d[std::size_t(r) * cols + c]; }
    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
};

template <class T>
T abs_of(const T& x) { return x < T(0) ? -x : x; }

// Floor-style quotient so that remainders shrink in absolute value.
template <class T>
T quotient(const T& a, const T& b) {
    T q = a / b;
    return q;
}

template <class T>
struct SmithWork {
    Mat<T> A, U, Ui, V, Vi;

    explicit SmithWork(const IntMatrix& a)
        : A(a.rows(), a.cols()), U(Mat<T>::identity(a.rows())), Ui(Mat<T>::identity(a.rows())),
          V(Mat<T>::identity(a.cols())), Vi(Mat<T>::identity(a.cols())) {
        for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < a.cols(); ++c) A(r, c) = T(a(r, c));
    }

    // row i += c * row j
    void row_add(int i, int j, const T& c) {
        if (c == T(0)) return;
        for (int k = 0; k < A.cols; ++k) A(i, k) = A(i, k) + c * A(j, k);
        for (int k = 0; k < U.cols; ++k) U(i, k) = U(i, k) + c * U(j, k);
        for (int k = 0; k < Ui.rows; ++k) Ui(k, j) = Ui(k, j) - c * Ui(k, i);
    }
    void row_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < A.cols; ++k) std::swap(A(i, k), A(j, k));
        for (int k = 0; k < U.cols; ++k) std::swap(U(i, k), U(j, k));
        for (int k = 0; k < Ui.rows; ++k) std::swap(Ui(k, i), Ui(k, j));
    }
    void row_negate(int i) {
        for (int k = 0; k < A.cols; ++k) A(i, k) = -A(i, k);
        for (int k = 0; k < U.cols; ++k) U(i, k) = -U(i, k);
        for (int k = 0; k < Ui.rows; ++k) Ui(k, i) = -Ui(k, i);
    }
    // col i += c * col j
    void col_add(int i, int j, const T& c) {
        if (c == T(0)) return;
        for (int k = 0; k < A.rows; ++k) A(k, i) = A(k, i) + c * A(k, j);
        for (int k = 0; k < V.rows; ++k) V(k, i) = V(k, i) + c * V(k, j);
        for (int k = 0; k < Vi.cols; ++k) Vi(j, k) = Vi(j, k) - c * Vi(i, k);
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int k = 0; k < A.rows; ++k) std::swap(A(k, i), A(k, j));
        for (int k = 0; k < V.rows; ++k) std::swap(V(k, i), V(k, j));
        for (int k = 0; k < Vi.cols; ++k) std::swap(Vi(i, k), Vi(j, k));
    }

    void run() {
        const int m = A.rows, n = A.cols;
        const int steps = std::min(m, n);
        for (int t = 0; t < steps; ++t) {
            while (true) {
                // pivot: smallest nonzero |entry| in the trailing block
                int pr = -1, pc = -1;
                for (int r = t; r < m; ++r)
                    for (int c = t; c < n; ++c)
                        if (A(r, c) != T(0) && (pr < 0 || abs_of(A(r, c)) < abs_of(A(pr, pc)))) {
                            pr = r;
                            pc = c;
                        }
                if (pr < 0) return; // trailing block is zero
                row_swap(t, pr);
                col_swap(t, pc);
                bool clean = true;
                for (int r = t + 1; r < m; ++r) {
                    if (A(r, t) == T(0)) continue;
                    row_add(r, t, -quotient(A(r, t), A(t, t)));
                    if (A(r, t) != T(0)) clean = false;
                }
                for (int c = t + 1; c < n; ++c) {
                    if (A(t, c) == T(0)) continue;
                    col_add(c, t, -quotient(A(t, c), A(t, t)));
                    if (A(t, c) != T(0)) clean = false;
                }
                if (!clean) continue;
                // divisibility: pivot must divide the trailing block
                int bad_r = -1;
                for (int r = t + 1; r < m && bad_r < 0; ++r)
                    for (int c = t + 1; c < n; ++c)
                        if (A(r, c) % A(t, t) != T(0)) {
                            bad_r = r;
                            break;
                        }
                if (bad_r < 0) break;
                row_add(t, bad_r, T(1));
            }
            if (A(t, t) < T(0)) row_negate(t);
        }
    }
};

template <class T>
IntMatrix export_matrix(const Mat<T>& m) {
    IntMatrix out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) out(r, c) = to_int(m(r, c));
    return out;
}

template <class T>
SmithForm smith_with(const IntMatrix& a) {
    SmithWork<T> w(a);
    w.run();
    SmithForm s;
    s.U = export_matrix(w.U);
    s.U_inv = export_matrix(w.Ui);
    s.V = export_matrix(w.V);
    s.V_inv = export_matrix(w.Vi);
    const int k = std::min(a.rows(), a.cols());
    s.diagonal.resize(k);
    for (int i = 0; i < k; ++i) s.diagonal[i] = to_int(w.A(i, i));
    return s;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    try {
        return smith_with<Checked>(a);
    } catch (const Overflow&) {
        SmithForm s = smith_with<boost::multiprecision::cpp_int>(a);
        s.promoted = true;
        return s;
    }
}

int rank(const IntMatrix& a) { return rank(to_rational(a)); }

Int determinant(const IntMatrix& a) {
    check_invariant(a.rows() == a.cols(), "lattice.dimension_mismatch", "determinant of non-square matrix");
    RatMatrix m = to_rational(a);
    const int n = a.rows();
    Rational det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            Rational f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    check_invariant(det.denominator() == 1, "lattice.internal", "non-integral determinant");
    return det.numerator();
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    auto inv = inverse(to_rational(a));
    if (!inv) fail("lattice.singular", "matrix is singular");
    IntMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) {
            const Rational& x = (*inv)[r][c];
            if (x.denominator() != 1) fail("lattice.not_unimodular", "matrix is not unimodular");
            out(r, c) = x.numerator();
        }
    return out;
}

// ---------------- LatticeQuotient ----------------

std::string to_string(const LatticeClass& c) {
    std::string s = to_string(std::span<const Int>(c.free));
    if (!c.tors.empty()) s += "+t" + to_string(std::span<const Int>(c.tors));
    return s;
}

LatticeQuotient::LatticeQuotient(int ambient_rank, IntMatrix relations)
    : ambient_rank_(ambient_rank), relations_(std::move(relations)) {
    check_invariant(relations_.rows() == ambient_rank_ || relations_.cols() == 0, "lattice.dimension_mismatch",
                    "relation matrix must have ambient_rank rows");
    if (relations_.cols() == 0) relations_ = IntMatrix(ambient_rank_, 0);
    smith_ = smith_normal_form(relations_);
    for (int i = 0; i < ambient_rank_; ++i) {
        Int d = i < int(smith_.diagonal.size()) ? smith_.diagonal[i] : 0;
        if (d == 0)
            free_slots_.push_back(i);
        else if (d > 1) {
            torsion_slots_.push_back(i);
            torsion_.push_back(d);
        }
    }
}

Int LatticeQuotient::torsion_order() const {
    Int p = 1;
    for (Int d : torsion_) p *= d;
    return p;
}

LatticeClass LatticeQuotient::project(std::span<const Int> x) const {
    if (int(x.size()) != ambient_rank_)
        fail("folding.dimension_mismatch", "vector of length " + std::to_string(x.size()) +
                                               " does not lie in a lattice of rank " + std::to_string(ambient_rank_));
    IntVec y = smith_.U.apply(x);
    LatticeClass c;
    for (int s : free_slots_) c.free.push_back(y[s]);
    for (std::size_t k = 0; k < torsion_slots_.size(); ++k) c.tors.push_back(mod_floor(y[torsion_slots_[k]], torsion_[k]));
    return c;
}

IntVec LatticeQuotient::lift(const LatticeClass& c) const {
    IntVec y(ambient_rank_, 0);
    for (std::size_t k = 0; k < free_slots_.size(); ++k) y[free_slots_[k]] = c.free[k];
    for (std::size_t k = 0; k < torsion_slots_.size(); ++k) y[torsion_slots_[k]] = c.tors[k];
    return smith_.U_inv.apply(y);
}

LatticeClass LatticeQuotient::zero() const {
    return LatticeClass{IntVec(free_slots_.size(), 0), IntVec(torsion_.size(), 0)};
}

LatticeClass LatticeQuotient::normalize(LatticeClass c) const {
    for (std::size_t k = 0; k < torsion_.size(); ++k) c.tors[k] = mod_floor(c.tors[k], torsion_[k]);
    return c;
}

LatticeClass LatticeQuotient::add(const LatticeClass& a, const LatticeClass& b) const {
    return normalize(LatticeClass{ramsat::add(a.free, b.free), ramsat::add(a.tors, b.tors)});
}

LatticeClass LatticeQuotient::negate(const LatticeClass& a) const {
    return normalize(LatticeClass{ramsat::scale(a.free, -1), ramsat::scale(a.tors, -1)});
}

LatticeClass LatticeQuotient::scale(const LatticeClass& a, Int k) const {
    return normalize(LatticeClass{ramsat::scale(a.free, k), ramsat::scale(a.tors, k)});
}

std::vector<LatticeClass> LatticeQuotient::torsion_classes() const {
    std::vector<LatticeClass> out;
    LatticeClass c = zero();
    const std::size_t t = torsion_.size();
    while (true) {
        out.push_back(c);
        std::size_t k = t;
        while (k > 0) {
            --k;
            if (++c.tors[k] < torsion_[k]) goto next;
            c.tors[k] = 0;
        }
        break;
    next:;
    }
    return out;
}

IntMatrix LatticeQuotient::induced(const IntMatrix& m) const {
    const int f = free_rank(), t = int(torsion_.size());
    IntMatrix out(f + t, f + t);
    for (int j = 0; j < f + t; ++j) {
        LatticeClass e = zero();
        if (j < f)
            e.free[j] = 1;
        else
            e.tors[j - f] = 1;
        LatticeClass img = project(m.apply(lift(e)));
        if (j >= f)
            check_invariant(is_zero(img.free), "folding.not_equivariant", "endomorphism maps torsion to a free class");
        for (int i = 0; i < f; ++i) out(i, j) = img.free[i];
        for (int i = 0; i < t; ++i) out(f + i, j) = img.tors[i];
    }
    return out;
}

LatticeClass LatticeQuotient::apply(const IntMatrix& ind, const LatticeClass& c) const {
    const int f = free_rank(), t = int(torsion_.size());
    IntVec x(f + t);
    std::copy(c.free.begin(), c.free.end(), x.begin());
    std::copy(c.tors.begin(), c.tors.end(), x.begin() + f);
    IntVec y = ind.apply(x);
    LatticeClass r{IntVec(y.begin(), y.begin() + f), IntVec(y.begin() + f, y.end())};
    return normalize(std::move(r));
}

IntMatrix LatticeQuotient::free_lifts() const {
    IntMatrix out(ambient_rank_, free_rank());
    for (int j = 0; j < free_rank(); ++j) {
        LatticeClass e = zero();
        e.free[j] = 1;
        IntVec l = lift(e);
        for (int i = 0; i < ambient_rank_; ++i) out(i, j) = l[i];
    }
    return out;
}

// ---------------- rational linear algebra ----------------

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix m(a.rows(), RatVec(a.cols()));
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) m[r][c] = a(r, c);
    return m;
}

int rank(RatMatrix m) {
    if (m.empty()) return 0;
    const int rows = int(m.size()), cols = int(m[0].size());
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int p = -1;
        for (int r = rk; r < rows; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[rk]);
        for (int r = rk + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rk][c];
            for (int k = c; k < cols; ++k) m[r][k] -= f * m[rk][k];
        }
        ++rk;
    }
    return rk;
}

std::optional<RatMatrix> inverse(RatMatrix a) {
    const int n = int(a.size());
    RatMatrix inv(n, RatVec(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational piv = a[c][c];
        for (int k = 0; k < n; ++k) {
            a[c][k] /= piv;
            inv[c][k] /= piv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (int k = 0; k < n; ++k) {
                a[r][k] -= f * a[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
    auto inv = inverse(a);
    if (!inv) return std::nullopt;
    RatVec x(a.size(), 0);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) x[r] += (*inv)[r][c] * b[c];
    return x;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m, int cols) {
    std::vector<int> pivots;
    const int rows = int(m.size());
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int p = -1;
        for (int r = rk; r < rows; ++r)
            if (m[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m[p], m[rk]);
        Rational lead = m[rk][c];
        for (auto& x : m[rk]) x /= lead;
        for (int r = 0; r < rows; ++r) {
            if (r == rk || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[rk][k];
        }
        pivots.push_back(c);
        ++rk;
    }
    return pivots;
}

} // namespace

std::optional<RatVec> solve_exact(const RatMatrix& a, const RatVec& b) {
    const int rows = int(a.size());
    if (rows != int(b.size())) return std::nullopt;
    const int cols = rows == 0 ? 0 : int(a[0].size());
    RatMatrix m = a;
    for (int r = 0; r < rows; ++r) m[r].push_back(b[r]);
    auto piv = rref(m, cols);
    if (int(piv.size()) != cols) return std::nullopt;
    for (int r = cols; r < rows; ++r)
        if (m[r][cols] != 0) return std::nullopt;
    RatVec x(cols, 0);
    for (int k = 0; k < cols; ++k) x[k] = m[k][cols];
    return x;
}

std::vector<RatVec> nullspace(const RatMatrix& a, int cols) {
    RatMatrix m = a;
    auto piv = rref(m, cols);
    std::vector<char> is_pivot(cols, 0);
    for (int c : piv) is_pivot[c] = 1;
    std::vector<RatVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec x(cols, 0);
        x[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = -m[k][f];
        basis.push_back(x);
    }
    return basis;
}

IntVec primitive_integer(std::span<const Rational> v) {
    Int l = lcm_of_denominators(v);
    IntVec out;
    Int g = 0;
    for (const auto& x : v) {
        out.push_back((x * l).numerator());
        g = std::gcd(g, out.back());
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

Int lcm_of_denominators(std::span<const Rational> v) {
    Int l = 1;
    for (const auto& x : v) l = std::lcm(l, x.denominator());
    return l;
}

} // namespace ramsat
