#pragma once

#include <cstdint>
#include <vector>

#include "qprs/field.hpp"

namespace qprs {

// Dense square matrix over Z_m, row-major. Small and desk-scale: used for
// companion matrices and their powers.
class ModMatrix {
public:
    ModMatrix(std::uint64_t modulus, std::uint32_t n)
        : modulus_(modulus), n_(n), a_(std::size_t{n} * n, 0) {
        if (modulus < 2)
            throw TooSmallError("matrix modulus must be at least 2");
        if (n == 0)
            throw InvalidParameterError("matrix dimension must be positive");
    }

    static ModMatrix identity(std::uint64_t modulus, std::uint32_t n) {
        ModMatrix m(modulus, n);
        for (std::uint32_t i = 0; i < n; ++i)
            m.set(i, i, 1 % modulus);
        return m;
    }

    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint32_t dim() const noexcept { return n_; }

    std::uint64_t at(std::uint32_t i, std::uint32_t j) const {
        return a_[std::size_t{i} * n_ + j];
    }

    void set(std::uint32_t i, std::uint32_t j, std::uint64_t v) {
        a_[std::size_t{i} * n_ + j] = v % modulus_;
    }

    ModMatrix operator*(const ModMatrix& rhs) const {
        if (rhs.modulus_ != modulus_ || rhs.n_ != n_)
            throw DimensionMismatchError("matrix product of incompatible matrices");
        ModMatrix out(modulus_, n_);
        for (std::uint32_t i = 0; i < n_; ++i) {
            for (std::uint32_t k = 0; k < n_; ++k) {
                const std::uint64_t lhs_ik = at(i, k);
                if (lhs_ik == 0)
                    continue;
                for (std::uint32_t j = 0; j < n_; ++j) {
                    const std::uint64_t v =
                        add_mod(out.at(i, j), mul_mod(lhs_ik, rhs.at(k, j), modulus_), modulus_);
                    out.a_[std::size_t{i} * n_ + j] = v;
                }
            }
        }
        return out;
    }

    ModMatrix pow(std::uint64_t e) const {
        ModMatrix result = identity(modulus_, n_);
        ModMatrix base = *this;
        while (e > 0) {
            if (e & 1)
                result = result * base;
            e >>= 1;
            if (e)
                base = base * base;
        }
        return result;
    }

    friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

private:
    std::uint64_t modulus_;
    std::uint32_t n_;
    std::vector<std::uint64_t> a_;
};

} // namespace qprs
