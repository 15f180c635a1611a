#include "hochex/scalar.hpp"

namespace hochex {

namespace {

bool is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

unsigned long powmod(unsigned long base, unsigned long exp, unsigned long p) {
    unsigned long acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return acc;
}

}  // namespace

FieldSpec make_field(unsigned long characteristic) {
    if (characteristic == 0) return FieldSpec{0};
    if (characteristic >= (1ul << 31))
        throw std::invalid_argument("field characteristic too large (>= 2^31)");
    if (!is_prime(characteristic))
        throw std::invalid_argument("field characteristic must be 0 or prime");
    return FieldSpec{characteristic};
}

Scalar Scalar::zero(const FieldSpec& fs) { return from_int(0, fs); }

Scalar Scalar::one(const FieldSpec& fs) { return from_int(1, fs); }

Scalar Scalar::from_int(long long v, const FieldSpec& fs) {
    Scalar s;
    s.fs_ = fs;
    if (fs.is_rational()) {
        s.q_ = mpq_class(static_cast<long>(v));
    } else {
        long long r = v % static_cast<long long>(fs.characteristic);
        if (r < 0) r += static_cast<long long>(fs.characteristic);
        s.r_ = static_cast<unsigned long>(r);
    }
    return s;
}

Scalar Scalar::from_rational(const mpq_class& q, const FieldSpec& fs) {
    if (!fs.is_rational())
        throw std::invalid_argument("rational literal over a prime field");
    Scalar s;
    s.fs_ = fs;
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& fs) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        if (!fs.is_rational())
            throw std::invalid_argument("fraction literal over a prime field");
        mpq_class q(text);
        q.canonicalize();
        return from_rational(q, fs);
    }
    std::size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos != text.size())
        throw std::invalid_argument("bad scalar literal: " + text);
    return from_int(v, fs);
}

bool Scalar::is_zero() const {
    return fs_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return fs_.is_rational() ? q_ == 1 : r_ == 1 % fs_.characteristic;
}

void Scalar::check_same(const Scalar& o) const {
    if (!(fs_ == o.fs_))
        throw std::invalid_argument("scalar arithmetic across different fields");
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (fs_.is_rational()) {
        s.q_ = -q_;
    } else {
        s.r_ = r_ == 0 ? 0 : fs_.characteristic - r_;
    }
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (fs_.is_rational()) {
        s.q_ = q_ + o.q_;
    } else {
        unsigned long r = r_ + o.r_;
        if (r >= fs_.characteristic) r -= fs_.characteristic;
        s.r_ = r;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (fs_.is_rational()) {
        s.q_ = q_ * o.q_;
    } else {
        s.r_ = mulmod(r_, o.r_, fs_.characteristic);
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar s = *this;
    if (fs_.is_rational()) {
        s.q_ = 1 / q_;
    } else {
        s.r_ = powmod(r_, fs_.characteristic - 2, fs_.characteristic);
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (!(fs_ == o.fs_)) return false;
    return fs_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (fs_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

const mpq_class& Scalar::rational() const {
    if (!fs_.is_rational())
        throw std::logic_error("rational() on a prime-field scalar");
    return q_;
}

unsigned long Scalar::residue() const {
    if (fs_.is_rational())
        throw std::logic_error("residue() on a rational scalar");
    return r_;
}

}  // namespace hochex
