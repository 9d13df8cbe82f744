#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cyclica {

/// Exact rational number. Values whose numerator and denominator fit in
/// int64 stay on a machine-word path; anything larger lives in an mpq_class.
/// The representation is canonical: small iff it fits, so equality is cheap.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : n_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    /// Parses "p", "-p" or "p/q" with arbitrary-size integers.
    static Rational parse(std::string_view s);

    [[nodiscard]] bool is_zero() const { return !big_ && n_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_small() const { return !big_; }
    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] std::string str() const;
    [[nodiscard]] double to_double() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    /// Inverse; throws std::domain_error on zero.
    [[nodiscard]] Rational inverse() const;

private:
    void set_big(mpq_class q);
    void set_i128(__int128 n, __int128 d);

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace cyclica
