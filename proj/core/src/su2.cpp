#include "lingdyn/su2.hpp"

#include "lingdyn/error.hpp"

#include <algorithm>
#include <cmath>

namespace lingdyn::su2 {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

Matrix2::Matrix2(Complex a00, Complex a01, Complex a10, Complex a11)
    : entries_{a00, a01, a10, a11} {
    if (!std::all_of(entries_.begin(), entries_.end(), finite))
        throw DomainError("Matrix2: non-finite entry");
}

Matrix2 Matrix2::adjoint() const {
    return {std::conj(entries_[0]), std::conj(entries_[2]), std::conj(entries_[1]),
            std::conj(entries_[3])};
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    return {a.entries_[0] + b.entries_[0], a.entries_[1] + b.entries_[1],
            a.entries_[2] + b.entries_[2], a.entries_[3] + b.entries_[3]};
}

Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
    return {a.entries_[0] - b.entries_[0], a.entries_[1] - b.entries_[1],
            a.entries_[2] - b.entries_[2], a.entries_[3] - b.entries_[3]};
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    const auto& x = a.entries_;
    const auto& y = b.entries_;
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Matrix2 operator*(Complex s, const Matrix2& m) {
    return {s * m.entries_[0], s * m.entries_[1], s * m.entries_[2], s * m.entries_[3]};
}

double Matrix2::distance(const Matrix2& other) const {
    double d = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        d = std::max(d, std::abs(entries_[i] - other.entries_[i]));
    return d;
}

Ket2::Ket2(Complex upper, Complex lower) : amps_{upper, lower} {
    if (!finite(upper) || !finite(lower))
        throw DomainError("Ket2: non-finite amplitude");
}

Complex Ket2::inner(const Ket2& other) const {
    return std::conj(amps_[0]) * other.amps_[0] + std::conj(amps_[1]) * other.amps_[1];
}

Matrix2 pauli(Generator which) {
    constexpr Complex i{0.0, 1.0};
    switch (which) {
    case Generator::S1: return {0.0, 0.5, 0.5, 0.0};
    case Generator::S2: return {0.0, -0.5 * i, 0.5 * i, 0.0};
    case Generator::S3: return {0.5, 0.0, 0.0, -0.5};
    case Generator::ID: return Matrix2::identity();
    case Generator::PLUS: return {0.0, 1.0, 0.0, 0.0};
    case Generator::MINUS: return {0.0, 0.0, 1.0, 0.0};
    }
    throw DomainError("pauli: unknown generator");
}

Matrix2 commutator(const Matrix2& a, const Matrix2& b) { return a * b - b * a; }

Ket2 apply(const Matrix2& m, const Ket2& k) {
    return {m(0, 0) * k[0] + m(0, 1) * k[1], m(1, 0) * k[0] + m(1, 1) * k[1]};
}

} // namespace lingdyn::su2
