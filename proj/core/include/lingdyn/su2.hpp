#pragma once

#include <array>
#include <complex>

namespace lingdyn::su2 {

using Complex = std::complex<double>;

/// 2x2 complex matrix, row-major. Entries are always finite.
class Matrix2 {
public:
    constexpr Matrix2() = default;
    /// Throws DomainError if any entry is NaN or infinite.
    Matrix2(Complex a00, Complex a01, Complex a10, Complex a11);

    Complex operator()(int row, int col) const { return entries_[row * 2 + col]; }

    Matrix2 adjoint() const;
    Complex trace() const { return entries_[0] + entries_[3]; }
    Complex determinant() const { return entries_[0] * entries_[3] - entries_[1] * entries_[2]; }

    friend Matrix2 operator+(const Matrix2& a, const Matrix2& b);
    friend Matrix2 operator-(const Matrix2& a, const Matrix2& b);
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend Matrix2 operator*(Complex s, const Matrix2& m);
    friend Matrix2 operator-(const Matrix2& m) { return Complex{-1.0} * m; }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;

    /// Largest entrywise modulus of the difference.
    double distance(const Matrix2& other) const;

    static Matrix2 zero() { return {}; }
    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

private:
    std::array<Complex, 4> entries_{};
};

/// Two-component state. Basis convention: |1> = (1,0)^T, |0> = (0,1)^T.
class Ket2 {
public:
    constexpr Ket2() = default;
    Ket2(Complex upper, Complex lower);

    Complex operator[](int i) const { return amps_[i]; }

    /// <this|other>, conjugate-linear in the bra.
    Complex inner(const Ket2& other) const;
    bool is_zero() const { return amps_[0] == Complex{} && amps_[1] == Complex{}; }

    friend bool operator==(const Ket2&, const Ket2&) = default;
    friend Ket2 operator*(Complex s, const Ket2& k) { return {s * k.amps_[0], s * k.amps_[1]}; }

    static Ket2 ground() { return {0.0, 1.0}; }
    static Ket2 excited() { return {1.0, 0.0}; }

private:
    std::array<Complex, 2> amps_{};
};

enum class Generator { S1, S2, S3, ID, PLUS, MINUS };

/// S1, S2, S3 carry the 1/2 prefactor; PLUS/MINUS are the unit-entry
/// matrices [[0,1],[0,0]] and [[0,0],[1,0]], which equal S1 +/- i S2.
Matrix2 pauli(Generator which);

Matrix2 commutator(const Matrix2& a, const Matrix2& b);

Ket2 apply(const Matrix2& m, const Ket2& k);

} // namespace lingdyn::su2
