#pragma once

// Exact integer lattice arithmetic: dense integer matrices, Smith normal form,
// finitely generated quotients Z^n / span(relations), and small rational
// linear algebra used for apartment geometry.

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ramsat {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using Rational = boost::rational<Int>;
using RatVec = std::vector<Rational>;

// boost::rational's mixed int/rational operator== recurses forever under the
// C++20 reversed-candidate rules; these exact matches take precedence.
inline bool operator==(const Rational& a, int b) { return a == Rational(b); }
inline bool operator==(int a, const Rational& b) { return Rational(a) == b; }

Int dot(std::span<const Int> a, std::span<const Int> b);
IntVec add(std::span<const Int> a, std::span<const Int> b);
IntVec sub(std::span<const Int> a, std::span<const Int> b);
IntVec scale(std::span<const Int> a, Int c);
bool is_zero(std::span<const Int> a);
std::string to_string(std::span<const Int> v);

/// Floor division for signed integers (rounds toward negative infinity).
Int floor_div(Int a, Int b);
/// Non-negative remainder in [0, |m|).
Int mod_floor(Int a, Int m);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, int cols);
    static IntMatrix from_columns(const std::vector<IntVec>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    Int operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

    IntVec row(int r) const;
    IntVec col(int c) const;
    IntVec apply(std::span<const Int> v) const;
    IntMatrix transpose() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    IntVec data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (d_i >= 0).
struct SmithForm {
    IntMatrix U, U_inv, V, V_inv;
    IntVec diagonal; // length min(rows, cols)
    bool promoted = false; // true when the int64 pass overflowed and arbitrary precision was used
};

/// Exact Smith normal form. Runs in overflow-checked int64 first and repeats in
/// arbitrary precision if any intermediate overflows; throws if the final
/// factors do not fit in int64.
SmithForm smith_normal_form(const IntMatrix& a);

/// Rank over Q of an integer matrix.
int rank(const IntMatrix& a);

/// Determinant of a square integer matrix (fraction-free elimination).
Int determinant(const IntMatrix& a);

/// Integer inverse of a unimodular matrix; throws if det != +-1.
IntMatrix unimodular_inverse(const IntMatrix& a);

/// Element of Z^free (+) prod Z/d_i. Torsion coordinates are kept reduced in [0, d_i).
struct LatticeClass {
    IntVec free;
    IntVec tors;

    friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
    friend auto operator<=>(const LatticeClass&, const LatticeClass&) = default;
};

std::string to_string(const LatticeClass& c);

/// The quotient Z^n / span(columns of relations), presented through its Smith form.
class LatticeQuotient {
public:
    LatticeQuotient() = default;
    LatticeQuotient(int ambient_rank, IntMatrix relations);

    int ambient_rank() const { return ambient_rank_; }
    int free_rank() const { return int(free_slots_.size()); }
    const IntVec& torsion() const { return torsion_; }
    const IntMatrix& relations() const { return relations_; }
    const SmithForm& smith() const { return smith_; }
    /// Product of the torsion invariant factors.
    Int torsion_order() const;

    LatticeClass project(std::span<const Int> x) const;
    /// A representative in the ambient lattice.
    IntVec lift(const LatticeClass& c) const;

    LatticeClass zero() const;
    LatticeClass add(const LatticeClass& a, const LatticeClass& b) const;
    LatticeClass negate(const LatticeClass& a) const;
    LatticeClass sub(const LatticeClass& a, const LatticeClass& b) const { return add(a, negate(b)); }
    LatticeClass scale(const LatticeClass& a, Int k) const;
    LatticeClass normalize(LatticeClass c) const;
    bool is_torsion(const LatticeClass& c) const { return is_zero(c.free); }

    /// All torsion classes (free part zero), in lexicographic order.
    std::vector<LatticeClass> torsion_classes() const;

    /// Matrix of the endomorphism induced by an ambient matrix m (which must
    /// preserve the relation span), acting on concatenated (free, tors) coordinates.
    IntMatrix induced(const IntMatrix& m) const;
    /// Apply an induced matrix; reduces the torsion part.
    LatticeClass apply(const IntMatrix& induced, const LatticeClass& c) const;

    /// Lifts of the free basis vectors as ambient columns (ambient_rank x free_rank).
    IntMatrix free_lifts() const;

private:
    int ambient_rank_ = 0;
    IntMatrix relations_;
    SmithForm smith_;
    std::vector<int> free_slots_;    // rows of U giving free coordinates
    std::vector<int> torsion_slots_; // rows of U giving torsion coordinates
    IntVec torsion_;
};

// ---- small exact rational linear algebra ----

using RatMatrix = std::vector<RatVec>; // row-major

RatMatrix to_rational(const IntMatrix& a);
int rank(RatMatrix a);
/// Inverse of a square rational matrix, nullopt if singular.
std::optional<RatMatrix> inverse(RatMatrix a);
/// Unique solution of a * x = b for square invertible a, nullopt otherwise.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);
/// Unique solution of a * x = b for a of full column rank (any shape), nullopt
/// if the system is inconsistent or underdetermined.
std::optional<RatVec> solve_exact(const RatMatrix& a, const RatVec& b);
/// Basis of the right kernel {x : a x = 0}.
std::vector<RatVec> nullspace(const RatMatrix& a, int cols);
Int lcm_of_denominators(std::span<const Rational> v);
/// Smallest positive integer multiple of a rational vector with coprime entries.
IntVec primitive_integer(std::span<const Rational> v);

} // namespace ramsat
