#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace schur {

/// Exact rational scalar over arbitrary-precision integers.
/// Always stored canonical: reduced, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    /// "p/q" with q > 0 reduced, or plain "p" when q == 1.
    std::string str() const {
        if (v_.get_den() == 1)
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Accepts "p", "-p", "p/q" with q > 0 after reduction. Rejects empty text,
    /// zero denominators and anything that is not a plain fraction literal.
    static std::optional<Rational> parse(std::string_view text) {
        auto parse_int = [](std::string_view s, bool allow_sign) -> std::optional<mpz_class> {
            if (s.empty())
                return std::nullopt;
            size_t i = 0;
            if (allow_sign && (s[0] == '-' || s[0] == '+'))
                i = 1;
            if (i == s.size())
                return std::nullopt;
            for (size_t k = i; k < s.size(); ++k)
                if (s[k] < '0' || s[k] > '9')
                    return std::nullopt;
            return mpz_class(std::string(s), 10);
        };
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            auto n = parse_int(text, true);
            if (!n)
                return std::nullopt;
            return Rational(*n);
        }
        auto n = parse_int(text.substr(0, slash), true);
        auto d = parse_int(text.substr(slash + 1), false);
        if (!n || !d || *d == 0)
            return std::nullopt;
        return Rational(*n, *d);
    }

private:
    mpq_class v_;
};

}  // namespace schur
