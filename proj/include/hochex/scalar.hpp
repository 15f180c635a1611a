#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hochex {

// Ground field descriptor: characteristic 0 means the rationals, otherwise a
// prime field F_p.  Primes are capped below 2^31 so products of residues fit
// comfortably in unsigned 128-bit intermediates.
struct FieldSpec {
    unsigned long characteristic = 0;

    bool operator==(const FieldSpec&) const = default;
    bool is_rational() const { return characteristic == 0; }
};

FieldSpec make_field(unsigned long characteristic);

// Exact field element.  The active representation is selected by the field's
// characteristic: a canonical mpq_class over the rationals, or a reduced
// residue in [0, p) over F_p.  Mixed-field arithmetic is rejected.
class Scalar {
public:
    Scalar() : fs_{0}, q_(0), r_(0) {}

    static Scalar zero(const FieldSpec& fs);
    static Scalar one(const FieldSpec& fs);
    static Scalar from_int(long long v, const FieldSpec& fs);
    static Scalar from_rational(const mpq_class& q, const FieldSpec& fs);
    // Parses "k", "-k" or "a/b" (the latter only over the rationals).
    static Scalar parse(const std::string& text, const FieldSpec& fs);

    const FieldSpec& field() const { return fs_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical text form: reduced fraction ("2/3", "-1") or residue ("4").
    std::string str() const;

    // Rational value (char 0 only).
    const mpq_class& rational() const;
    // Residue in [0, p) (char p only).
    unsigned long residue() const;

private:
    void check_same(const Scalar& o) const;

    FieldSpec fs_;
    mpq_class q_;
    unsigned long r_;
};

}  // namespace hochex
