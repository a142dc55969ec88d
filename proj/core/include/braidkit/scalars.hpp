#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// Dense polynomial in q with integer coefficients, c[i] is the coefficient of q^i.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpz_class> coeffs);
    static Poly constant(const mpz_class& c);
    static Poly monomial(const mpz_class& c, int deg);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const mpz_class& lc() const { return c_.back(); }
    const mpz_class& operator[](std::size_t i) const { return c_[i]; }
    std::size_t size() const { return c_.size(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    // number of factors of q dividing the polynomial
    int low_order() const;
    Poly shifted_down(int k) const;
    Poly shifted_up(int k) const;

    mpz_class content() const;
    Poly divexact_int(const mpz_class& d) const;
    Poly derivative() const;
    mpq_class eval(const mpq_class& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scaled(const mpz_class& s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // exact quotient a / b; b must divide a over Z[q]
    static Poly divexact(const Poly& a, const Poly& b);
    // pseudo-remainder of a by b
    static Poly prem(const Poly& a, const Poly& b);
    // primitive gcd with positive leading coefficient
    static Poly gcd(const Poly& a, const Poly& b);

    std::size_t hash() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Element q^shift * num / den of Q(q); num and den have nonzero constant terms,
// are coprime, share no integer content, and den has positive leading coefficient.
class QScalar {
public:
    QScalar();
    QScalar(long v);  // NOLINT(google-explicit-constructor)
    QScalar(int v) : QScalar(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit QScalar(const mpz_class& v);
    explicit QScalar(const mpq_class& v);
    static QScalar from_parts(Poly num, Poly den, int shift);
    static QScalar q_pow(int k);
    static QScalar q() { return q_pow(1); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_.is_zero() ? one_poly() : den_; }
    int shift() const { return shift_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_zero(); }
    // value independent of q
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0 && (shift_ == 0 || is_zero()); }
    bool is_laurent() const { return den_.is_zero(); }
    mpq_class constant_value() const;
    std::size_t complexity() const { return num_.size() + den_.size(); }

    QScalar operator-() const;
    QScalar inv() const;
    friend QScalar operator+(const QScalar& a, const QScalar& b);
    friend QScalar operator-(const QScalar& a, const QScalar& b);
    friend QScalar operator*(const QScalar& a, const QScalar& b);
    friend QScalar operator/(const QScalar& a, const QScalar& b);
    QScalar& operator+=(const QScalar& b) { return *this = *this + b; }
    QScalar& operator-=(const QScalar& b) { return *this = *this - b; }
    QScalar& operator*=(const QScalar& b) { return *this = *this * b; }
    QScalar& operator/=(const QScalar& b) { return *this = *this / b; }
    QScalar pow(int k) const;

    friend bool operator==(const QScalar& a, const QScalar& b) {
        return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

    // substitute q -> x where x is itself an element of Q(q)
    QScalar substitute(const QScalar& x) const;

    std::string str() const;
    std::size_t hash() const;

private:
    static QScalar canonical(Poly num, Poly den, int shift);
    static const Poly& one_poly();
    Poly num_;
    Poly den_;  // empty when the denominator is 1
    int shift_ = 0;
};

// q-integer (q^k - q^-k)/(q - q^-1), evaluated at the given value of q
QScalar qint(int k, const QScalar& q = QScalar::q());

// exact value at q = x
mpq_class eval_at(const QScalar& s, const mpq_class& x);

// order-th Taylor coefficient at q = 1 times order!, order in {0, 1}
mpq_class limit_coefficient(const QScalar& s, int order);

// square root in Q(q) if it exists
bool try_sqrt(const QScalar& s, QScalar& out);

QScalar parse_scalar(std::string_view text);

std::string to_string(const mpq_class& v);

}  // namespace braidkit

template <>
struct std::hash<braidkit::QScalar> {
    std::size_t operator()(const braidkit::QScalar& s) const noexcept { return s.hash(); }
};
