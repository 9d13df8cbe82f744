#include "cyclica/rational.hpp"

#include <limits>
#include <stdexcept>

namespace cyclica {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 x) { return x < 0 ? u128(0) - u128(x) : u128(x); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 x) {
    return x >= i128(std::numeric_limits<std::int64_t>::min()) &&
           x <= i128(std::numeric_limits<std::int64_t>::max());
}

mpz_class mpz_from_i128(i128 x) {
    bool neg = x < 0;
    u128 u = uabs(x);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & ~std::uint64_t(0)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    set_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    set_big(std::move(c));
}

void Rational::set_i128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        n_ = 0;
        d_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs(n), u128(d));
    if (g > 1) {
        n /= i128(g);
        d /= i128(g);
    }
    if (fits64(n) && fits64(d)) {
        n_ = static_cast<std::int64_t>(n);
        d_ = static_cast<std::int64_t>(d);
        big_.reset();
    } else {
        mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

void Rational::set_big(mpq_class q) {
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (num.fits_slong_p() && den.fits_slong_p()) {
        n_ = num.get_si();
        d_ = den.get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

Rational Rational::parse(std::string_view s) {
    std::string t(s);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = t.find('/');
    try {
        mpz_class num(t.substr(0, slash), 10);
        mpz_class den(1);
        if (slash != std::string::npos) den = mpz_class(t.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
        mpq_class q(num, den);
        q.canonicalize();
        Rational r;
        r.set_big(std::move(q));
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal '" + t + "'");
    }
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_from_i128(n_), mpz_from_i128(d_));
    return q;
}

std::string Rational::str() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return double(n_) / double(d_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.set_big(-*big_);
    } else {
        r.set_i128(-i128(n_), d_);
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(n_, o.n_, &s)) {
                n_ = s;
                return *this;
            }
        }
        set_i128(i128(n_) * o.d_ + i128(o.n_) * d_, i128(d_) * o.d_);
        return *this;
    }
    set_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            std::int64_t s;
            if (!__builtin_sub_overflow(n_, o.n_, &s)) {
                n_ = s;
                return *this;
            }
        }
        set_i128(i128(n_) * o.d_ - i128(o.n_) * d_, i128(d_) * o.d_);
        return *this;
    }
    set_big(to_mpq() - o.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            std::int64_t s;
            if (!__builtin_mul_overflow(n_, o.n_, &s)) {
                n_ = s;
                return *this;
            }
        }
        set_i128(i128(n_) * o.n_, i128(d_) * o.d_);
        return *this;
    }
    set_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (!big_ && !o.big_) {
        set_i128(i128(n_) * o.d_, i128(d_) * o.n_);
        return *this;
    }
    set_big(to_mpq() / o.to_mpq());
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational one(1);
    return one /= *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (bool(a.big_) != bool(b.big_)) return false;
    return *a.big_ == *b.big_;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return i128(a.n_) * b.d_ < i128(b.n_) * a.d_;
    return a.to_mpq() < b.to_mpq();
}

}  // namespace cyclica
