#include "braidkit/scalars.hpp"

#include "braidkit/detail/expr_parser.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace braidkit {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const mpz_class& c) {
    Poly p;
    if (c != 0) p.c_.push_back(c);
    return p;
}

Poly Poly::monomial(const mpz_class& c, int deg) {
    Poly p;
    if (c != 0) {
        p.c_.assign(static_cast<std::size_t>(deg) + 1, mpz_class(0));
        p.c_.back() = c;
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::low_order() const {
    int k = 0;
    while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
    return k;
}

Poly Poly::shifted_down(int k) const {
    if (k <= 0) return *this;
    Poly p;
    p.c_.assign(c_.begin() + k, c_.end());
    return p;
}

Poly Poly::shifted_up(int k) const {
    if (k <= 0 || is_zero()) return *this;
    Poly p;
    p.c_.assign(static_cast<std::size_t>(k), mpz_class(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::divexact_int(const mpz_class& d) const {
    if (d == 1) return *this;
    Poly p = *this;
    for (auto& x : p.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return p;
}

Poly Poly::derivative() const {
    Poly p;
    if (c_.size() <= 1) return p;
    p.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) p.c_[i - 1] = c_[i] * static_cast<long>(i);
    p.trim();
    return p;
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
    const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
    Poly r = big;
    for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    r.trim();
    return r;
}

Poly Poly::scaled(const mpz_class& s) const {
    if (s == 0) return {};
    Poly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (b.degree() == 0) return a.divexact_int(b.c_[0]);
    std::vector<mpz_class> r = a.c_;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) {
        if (a.is_zero()) return {};
        throw std::logic_error("inexact polynomial division");
    }
    std::vector<mpz_class> quo(static_cast<std::size_t>(dq) + 1);
    mpz_class t;
    for (int k = dq; k >= 0; --k) {
        mpz_class& top = r[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t()))
            throw std::logic_error("inexact polynomial division");
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
        quo[static_cast<std::size_t>(k)] = t;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), t.get_mpz_t(),
                       b.c_[static_cast<std::size_t>(j)].get_mpz_t());
    }
    for (int i = 0; i < db; ++i)
        if (r[static_cast<std::size_t>(i)] != 0) throw std::logic_error("inexact polynomial division");
    return Poly(std::move(quo));
}

Poly Poly::prem(const Poly& a, const Poly& b) {
    std::vector<mpz_class> r = a.c_;
    int db = b.degree();
    const mpz_class& lb = b.lc();
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
        int dr = static_cast<int>(r.size()) - 1;
        mpz_class t = r.back();
        for (auto& x : r) x *= lb;
        for (int j = 0; j <= db; ++j)
            mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), t.get_mpz_t(),
                       b.c_[static_cast<std::size_t>(j)].get_mpz_t());
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return Poly(std::move(r));
}

static Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class c = p.content();
    if (p.lc() < 0) c = -c;
    return p.divexact_int(c);
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    if (a.degree() == 0 || b.degree() == 0) return Poly::constant(1);
    Poly x = primitive_part(a);
    Poly y = primitive_part(b);
    if (x == y) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return Poly::constant(1);
        Poly r = prem(x, y);
        x = std::move(y);
        y = primitive_part(r);
    }
    return primitive_part(x);
}

std::size_t Poly::hash() const {
    std::size_t h = c_.size();
    for (const auto& x : c_) h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(x.get_mpz_t()));
    return h;
}

// ---------------------------------------------------------------- QScalar

const Poly& QScalar::one_poly() {
    static const Poly one = Poly::constant(1);
    return one;
}

QScalar::QScalar() = default;

QScalar::QScalar(long v) : num_(Poly::constant(mpz_class(v))) {}

QScalar::QScalar(const mpz_class& v) : num_(Poly::constant(v)) {}

QScalar::QScalar(const mpq_class& v_in) {
    mpq_class v = v_in;
    v.canonicalize();
    num_ = Poly::constant(v.get_num());
    if (v.get_num() != 0 && v.get_den() != 1) den_ = Poly::constant(v.get_den());
}

QScalar QScalar::from_parts(Poly num, Poly den, int shift) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    return canonical(std::move(num), std::move(den), shift);
}

QScalar QScalar::q_pow(int k) {
    QScalar s;
    s.num_ = Poly::constant(1);
    s.shift_ = k;
    return s;
}

QScalar QScalar::canonical(Poly num, Poly den, int shift) {
    QScalar s;
    if (num.is_zero()) return s;
    int ln = num.low_order();
    int ld = den.low_order();
    if (ln) num = num.shifted_down(ln);
    if (ld) den = den.shifted_down(ld);
    shift += ln - ld;
    if (den.degree() > 0 && num.degree() > 0) {
        Poly g = Poly::gcd(num, den);
        if (g.degree() > 0) {
            num = Poly::divexact(num, g);
            den = Poly::divexact(den, g);
        }
    }
    mpz_class cn = num.content();
    mpz_class cd = den.content();
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den.lc() < 0) c = -c;
    if (c != 1) {
        num = num.divexact_int(c);
        den = den.divexact_int(c);
    }
    s.num_ = std::move(num);
    if (!den.is_one()) s.den_ = std::move(den);
    s.shift_ = shift;
    return s;
}

mpq_class QScalar::constant_value() const {
    if (is_zero()) return 0;
    if (!is_constant()) throw std::logic_error("scalar depends on q");
    mpq_class v(num_[0], den()[0]);
    v.canonicalize();
    return v;
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return canonical(den(), num_, -shift_);
}

QScalar operator+(const QScalar& a, const QScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int s = std::min(a.shift_, b.shift_);
    Poly na = a.num_.shifted_up(a.shift_ - s);
    Poly nb = b.num_.shifted_up(b.shift_ - s);
    if (a.den_ == b.den_) {
        if (a.den_.is_zero()) {
            QScalar r;
            r.num_ = na + nb;
            if (r.num_.is_zero()) return r;
            int lo = r.num_.low_order();
            r.num_ = r.num_.shifted_down(lo);
            r.shift_ = s + lo;
            return r;
        }
        return QScalar::canonical(na + nb, a.den_, s);
    }
    const Poly& ad = a.den();
    const Poly& bd = b.den();
    if (ad.degree() == 0 && bd.degree() == 0)
        return QScalar::canonical(na.scaled(bd[0]) + nb.scaled(ad[0]), Poly::constant(ad[0] * bd[0]), s);
    Poly g = Poly::gcd(ad, bd);
    if (g.degree() == 0) return QScalar::canonical(na * bd + nb * ad, ad * bd, s);
    Poly da = Poly::divexact(ad, g);
    Poly db = Poly::divexact(bd, g);
    return QScalar::canonical(na * db + nb * da, da * bd, s);
}

QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }

QScalar operator*(const QScalar& a, const QScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_zero() && b.den_.is_zero()) {
        QScalar r;
        r.num_ = a.num_ * b.num_;
        r.shift_ = a.shift_ + b.shift_;
        return r;
    }
    if (a.den_.degree() <= 0 && b.den_.degree() <= 0)
        return QScalar::canonical(a.num_ * b.num_, Poly::constant(a.den()[0] * b.den()[0]), a.shift_ + b.shift_);
    Poly na = a.num_, nb = b.num_, da = a.den(), db = b.den();
    Poly g1 = Poly::gcd(na, db);
    if (g1.degree() > 0) {
        na = Poly::divexact(na, g1);
        db = Poly::divexact(db, g1);
    }
    Poly g2 = Poly::gcd(nb, da);
    if (g2.degree() > 0) {
        nb = Poly::divexact(nb, g2);
        da = Poly::divexact(da, g2);
    }
    QScalar r;
    Poly num = na * nb;
    Poly den = da * db;
    mpz_class cn = num.content(), cd = den.content(), c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den.lc() < 0) c = -c;
    r.num_ = num.divexact_int(c);
    r.den_ = den.divexact_int(c);
    if (r.den_.is_one()) r.den_ = Poly();
    r.shift_ = a.shift_ + b.shift_;
    return r;
}

QScalar operator/(const QScalar& a, const QScalar& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero");
    return a * b.inv();
}

QScalar QScalar::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    QScalar r(1), base = *this;
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

QScalar QScalar::substitute(const QScalar& x) const {
    auto horner = [&](const Poly& p) {
        QScalar acc;
        for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + QScalar(p[i]);
        return acc;
    };
    QScalar d = horner(den());
    if (d.is_zero()) throw PoleError("substitution hits a pole");
    if (shift_ < 0 && x.is_zero()) throw PoleError("substitution hits a pole at q = 0");
    return horner(num_) / d * x.pow(shift_);
}

static std::string laurent_str(const Poly& p, int shift) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const mpz_class& c = p[i];
        if (c == 0) continue;
        int e = static_cast<int>(i) + shift;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    if (first) os << '0';
    return os.str();
}

std::string QScalar::str() const {
    if (is_zero()) return "0";
    std::string n = laurent_str(num_, shift_);
    if (den_.is_zero()) return n;
    bool single_num = std::count_if(num_.coeffs().begin(), num_.coeffs().end(),
                                    [](const mpz_class& x) { return x != 0; }) == 1;
    std::string out = single_num ? n : "(" + n + ")";
    if (den_.degree() == 0) return out + "/" + den_[0].get_str();
    return out + "/(" + laurent_str(den_, 0) + ")";
}

std::size_t QScalar::hash() const { return num_.hash() * 31u ^ den_.hash() * 17u ^ static_cast<std::size_t>(shift_); }

// ---------------------------------------------------------------- utilities

QScalar qint(int k, const QScalar& q) {
    if (k < 0) return -qint(-k, q);
    QScalar acc;
    for (int j = 0; j < k; ++j) acc += q.pow(k - 1 - 2 * j);
    return acc;
}

mpq_class eval_at(const QScalar& s, const mpq_class& x_in) {
    if (s.is_zero()) return 0;
    mpq_class x = x_in;
    x.canonicalize();
    mpq_class d = s.den().eval(x);
    if (d == 0) throw PoleError("pole at q = " + x.get_str());
    if (x == 0 && s.shift() < 0) throw PoleError("pole at q = 0");
    mpq_class v = s.num().eval(x) / d;
    int k = s.shift();
    mpq_class xp = 1;
    for (int i = 0; i < std::abs(k); ++i) xp *= x;
    return k >= 0 ? mpq_class(v * xp) : mpq_class(v / xp);
}

mpq_class limit_coefficient(const QScalar& s, int order) {
    if (order == 0) return eval_at(s, 1);
    if (order != 1) throw std::invalid_argument("limit_coefficient supports order 0 or 1");
    if (s.is_zero()) return 0;
    mpq_class d = s.den().eval(1);
    if (d == 0) throw PoleError("pole at q = 1");
    mpq_class n = s.num().eval(1);
    mpq_class dn = s.num().derivative().eval(1);
    mpq_class dd = s.den().derivative().eval(1);
    return mpq_class(s.shift()) * n / d + (dn * d - n * dd) / (d * d);
}

static bool poly_sqrt(const Poly& p, Poly& out) {
    if (p.is_zero()) {
        out = p;
        return true;
    }
    if (p.degree() % 2 != 0 || p.lc() < 0) return false;
    int m = p.degree() / 2;
    std::vector<mpz_class> r(static_cast<std::size_t>(m) + 1);
    if (!mpz_perfect_square_p(p.lc().get_mpz_t())) return false;
    r[static_cast<std::size_t>(m)] = sqrt(p.lc());
    mpz_class two_top = 2 * r[static_cast<std::size_t>(m)];
    for (int i = m - 1; i >= 0; --i) {
        mpz_class s = p[static_cast<std::size_t>(m + i)];
        for (int j = i + 1; j < m; ++j) {
            int k = m + i - j;
            if (k > i && k < m) s -= r[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k)];
        }
        if (!mpz_divisible_p(s.get_mpz_t(), two_top.get_mpz_t())) return false;
        mpz_divexact(r[static_cast<std::size_t>(i)].get_mpz_t(), s.get_mpz_t(), two_top.get_mpz_t());
    }
    Poly cand(std::move(r));
    if (!(cand * cand == p)) return false;
    out = cand;
    return true;
}

bool try_sqrt(const QScalar& s, QScalar& out) {
    if (s.is_zero()) {
        out = s;
        return true;
    }
    if (s.shift() % 2 != 0) return false;
    Poly n, d;
    if (!poly_sqrt(s.num(), n) || !poly_sqrt(s.den(), d)) return false;
    out = QScalar::from_parts(n, d, s.shift() / 2);
    return true;
}

namespace {

struct ScalarSemantics {
    using value_type = QScalar;
    QScalar integer(const mpz_class& v) const { return QScalar(v); }
    QScalar identifier(const std::string& name, std::size_t pos) const {
        if (name == "q") return QScalar::q();
        throw ParseError("unknown symbol '" + name + "'", pos);
    }
    QScalar add(const QScalar& a, const QScalar& b) const { return a + b; }
    QScalar sub(const QScalar& a, const QScalar& b) const { return a - b; }
    QScalar mul(const QScalar& a, const QScalar& b) const { return a * b; }
    QScalar neg(const QScalar& a) const { return -a; }
    QScalar div(const QScalar& a, const QScalar& b, std::size_t pos) const {
        if (b.is_zero()) throw ParseError("division by zero", pos);
        return a / b;
    }
    QScalar pow(const QScalar& a, int k, std::size_t pos) const {
        if (k < 0 && a.is_zero()) throw ParseError("negative power of zero", pos);
        return a.pow(k);
    }
};

}  // namespace

QScalar parse_scalar(std::string_view text) {
    ScalarSemantics sem;
    return detail::ExprParser<ScalarSemantics>(text, sem).parse();
}

std::string to_string(const mpq_class& v) { return v.get_str(); }

}  // namespace braidkit
