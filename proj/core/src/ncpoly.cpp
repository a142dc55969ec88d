#include "braidkit/ncpoly.hpp"

#include "braidkit/detail/expr_parser.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace braidkit {

// ---------------------------------------------------------------- free polynomials

void add_term(Terms& t, const Word& w, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = t.find(w);
    if (it == t.end()) {
        t.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

Terms add(const Terms& a, const Terms& b) {
    Terms r = a;
    for (const auto& [w, c] : b) add_term(r, w, c);
    return r;
}

Terms scale(const Terms& a, const QScalar& s) {
    if (s.is_zero()) return {};
    Terms r;
    for (const auto& [w, c] : a) r.emplace(w, c * s);
    return r;
}

Terms free_mul(const Terms& a, const Terms& b) {
    Terms r;
    for (const auto& [w1, c1] : a)
        for (const auto& [w2, c2] : b) add_term(r, w1 + w2, c1 * c2);
    return r;
}

namespace {

// Builds free polynomials from text; extra scalar symbols come from `symbols`.
struct FreeSemantics {
    using value_type = Terms;
    const std::vector<std::string>* gens;
    std::map<std::string, QScalar> symbols;

    Terms integer(const mpz_class& v) const { return constant(QScalar(v)); }
    static Terms constant(const QScalar& s) {
        Terms t;
        add_term(t, Word(), s);
        return t;
    }
    Terms identifier(const std::string& name, std::size_t pos) const {
        for (std::size_t i = 0; i < gens->size(); ++i)
            if ((*gens)[i] == name) return Terms{{Word(1, static_cast<char>(i)), QScalar(1)}};
        auto it = symbols.find(name);
        if (it != symbols.end()) return constant(it->second);
        throw ParseError("unknown symbol '" + name + "'", pos);
    }
    Terms add(const Terms& a, const Terms& b) const { return braidkit::add(a, b); }
    Terms sub(const Terms& a, const Terms& b) const { return braidkit::add(a, scale(b, QScalar(-1))); }
    Terms mul(const Terms& a, const Terms& b) const { return free_mul(a, b); }
    Terms neg(const Terms& a) const { return scale(a, QScalar(-1)); }
    static bool scalar_of(const Terms& t, QScalar& s) {
        if (t.empty()) {
            s = QScalar(0);
            return true;
        }
        if (t.size() == 1 && t.begin()->first.empty()) {
            s = t.begin()->second;
            return true;
        }
        return false;
    }
    Terms div(const Terms& a, const Terms& b, std::size_t pos) const {
        QScalar s;
        if (!scalar_of(b, s)) throw ParseError("division by a non-scalar", pos);
        if (s.is_zero()) throw ParseError("division by zero", pos);
        return scale(a, s.inv());
    }
    Terms pow(const Terms& a, int k, std::size_t pos) const {
        QScalar s;
        if (scalar_of(a, s)) {
            if (k < 0 && s.is_zero()) throw ParseError("negative power of zero", pos);
            return constant(s.pow(k));
        }
        if (k < 0) throw ParseError("negative power of a non-scalar", pos);
        Terms r = constant(QScalar(1));
        for (int i = 0; i < k; ++i) r = free_mul(r, a);
        return r;
    }
};

Terms parse_free(std::string_view text, const std::vector<std::string>& gens, const std::map<std::string, QScalar>& symbols) {
    FreeSemantics sem{&gens, symbols};
    return detail::ExprParser<FreeSemantics>(text, sem).parse();
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r.get_ui();
}

// no top-level sum, so the coefficient can multiply a word without parentheses
bool simple_coefficient(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && i > 0 && (s[i] == '+' || s[i] == '-') && s[i - 1] == ' ') return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------- Presentation

PresentationPtr Presentation::from_relations(std::string name, std::vector<std::string> generators,
                                             const std::vector<Terms>& relations, const QScalar& q,
                                             std::vector<int> weights) {
    if (generators.size() > 120) throw std::invalid_argument("too many generators");
    std::shared_ptr<Presentation> p(new Presentation());
    p->name_ = std::move(name);
    p->gens_ = std::move(generators);
    p->q_ = q;
    if (weights.empty()) weights.assign(p->gens_.size(), 0);
    if (weights.size() != p->gens_.size()) throw std::invalid_argument("one weight per generator");
    p->weights_ = std::move(weights);
    const std::size_t g = p->gens_.size();
    p->expected_count = [g](std::size_t d) { return binomial(g + d - 1, d); };

    std::vector<Word> words;
    for (const auto& r : relations)
        for (const auto& [w, c] : r) {
            for (char ch : w)
                if (static_cast<std::size_t>(static_cast<unsigned char>(ch)) >= g)
                    throw std::invalid_argument("relation uses an unknown generator");
            words.push_back(w);
        }
    std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) { return p->less(b, a); });
    words.erase(std::unique(words.begin(), words.end()), words.end());
    std::map<Word, std::size_t> col;
    for (std::size_t i = 0; i < words.size(); ++i) col[words[i]] = i;
    Matrix m(relations.size(), words.size());
    for (std::size_t i = 0; i < relations.size(); ++i)
        for (const auto& [w, c] : relations[i]) m(i, col[w]) = c;
    Echelon e = rref(m);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const Word& lead = words[e.pivots[r]];
        if (lead.size() <= 1) {
            std::string what = lead.empty() ? "1 = 0" : "generator " + p->gens_[static_cast<unsigned char>(lead[0])];
            throw NonOrientable("relation with leading term of degree " + std::to_string(lead.size()) +
                                " (" + what + ") cannot be oriented as a rewriting rule");
        }
        Rule rule;
        rule.lead = lead;
        for (std::size_t c = e.pivots[r] + 1; c < words.size(); ++c)
            if (!e.rows(r, c).is_zero()) rule.tail.emplace(words[c], -e.rows(r, c));
        p->lead_index_[lead] = p->rules_.size();
        p->max_lead_ = std::max(p->max_lead_, lead.size());
        p->rules_.push_back(std::move(rule));
    }
    return p;
}

int Presentation::index_of(const std::string& g) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i] == g) return static_cast<int>(i);
    throw std::invalid_argument("unknown generator '" + g + "' in " + name_);
}

int Presentation::weight(const Word& w) const {
    int s = 0;
    for (char c : w) s += weights_[static_cast<unsigned char>(c)];
    return s;
}

bool Presentation::less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
        return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
    });
}

const Terms* Presentation::rule_for(const Word& w) const {
    auto it = lead_index_.find(w);
    return it == lead_index_.end() ? nullptr : &rules_[it->second].tail;
}

bool Presentation::is_irreducible(const Word& w) const {
    for (std::size_t len = 2; len <= max_lead_; ++len)
        for (std::size_t i = 0; i + len <= w.size(); ++i)
            if (lead_index_.count(w.substr(i, len))) return false;
    return true;
}

Terms Presentation::reduce_product(char x, const Word& normal) const {
    for (std::size_t len = 2; len <= max_lead_ && len - 1 <= normal.size(); ++len) {
        Word prefix = x + normal.substr(0, len - 1);
        const Terms* tail = rule_for(prefix);
        if (!tail) continue;
        Word rest = normal.substr(len - 1);
        Terms out;
        for (const auto& [w, c] : *tail)
            for (const auto& [w2, c2] : normal_form(w + rest)) add_term(out, w2, c * c2);
        return out;
    }
    return Terms{{x + normal, QScalar(1)}};
}

Terms Presentation::normal_form(const Word& w) const {
    if (w.size() <= 1) return Terms{{w, QScalar(1)}};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
    }
    Terms rest = normal_form(w.substr(1));
    Terms out;
    for (const auto& [m, c] : rest)
        for (const auto& [w2, c2] : reduce_product(w[0], m)) add_term(out, w2, c * c2);
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(w, out);
    return out;
}

Terms Presentation::normal_form(const Terms& t) const {
    Terms out;
    for (const auto& [w, c] : t)
        for (const auto& [w2, c2] : normal_form(w)) add_term(out, w2, c * c2);
    return out;
}

std::vector<Terms> Presentation::relations() const {
    std::vector<Terms> out;
    for (const auto& r : rules_) {
        Terms t = scale(r.tail, QScalar(-1));
        add_term(t, r.lead, QScalar(1));
        out.push_back(std::move(t));
    }
    return out;
}

std::string Presentation::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += '*';
        out += gens_[static_cast<unsigned char>(w[i])];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string Presentation::str(const Terms& t) const {
    if (t.empty()) return "0";
    std::vector<const std::pair<const Word, QScalar>*> items;
    for (const auto& kv : t) items.push_back(&kv);
    std::sort(items.begin(), items.end(), [&](auto* a, auto* b) { return less(b->first, a->first); });
    std::string out;
    for (auto* it : items) {
        const Word& w = it->first;
        std::string c = it->second.str();
        bool neg = false;
        if (simple_coefficient(c) && c[0] == '-') {
            neg = true;
            c = c.substr(1);
        }
        std::string body;
        if (w.empty())
            body = simple_coefficient(c) ? c : "(" + c + ")";
        else if (c == "1")
            body = word_str(w);
        else
            body = (simple_coefficient(c) ? c : "(" + c + ")") + "*" + word_str(w);
        if (out.empty())
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

std::string Presentation::to_json() const {
    nlohmann::json j;
    j["name"] = name_;
    j["generators"] = gens_;
    if (std::any_of(weights_.begin(), weights_.end(), [](int w) { return w != 0; })) j["weights"] = weights_;
    j["relations"] = nlohmann::json::array();
    for (const auto& r : rules_) j["relations"].push_back({{"lead", word_str(r.lead)}, {"tail", str(r.tail)}});
    return j.dump(2);
}

PresentationPtr Presentation::from_json(const std::string& text, const QScalar& q) {
    auto j = nlohmann::json::parse(text);
    auto gens = j.at("generators").get<std::vector<std::string>>();
    std::vector<int> weights;
    if (j.contains("weights")) weights = j["weights"].get<std::vector<int>>();
    std::map<std::string, QScalar> symbols{{"q", q}};
    std::vector<Terms> rels;
    std::vector<std::pair<Word, Terms>> oriented;
    for (const auto& r : j.at("relations")) {
        Terms lead = parse_free(r.at("lead").get<std::string>(), gens, symbols);
        Terms tail = parse_free(r.at("tail").get<std::string>(), gens, symbols);
        if (lead.size() != 1 || !lead.begin()->second.is_one())
            throw NonOrientable("rule lead must be a single word");
        oriented.emplace_back(lead.begin()->first, tail);
        rels.push_back(add(lead, scale(tail, QScalar(-1))));
    }
    auto p = from_relations(j.value("name", std::string("custom")), gens, rels, q, weights);
    for (const auto& [lead, tail] : oriented)
        for (const auto& [w, c] : tail)
            if (!p->less(w, lead)) throw NonOrientable("rule tail is not below its lead in the monomial order");
    return p;
}

// ---------------------------------------------------------------- elements

AlgebraElement::AlgebraElement(PresentationPtr p, Terms t) : p_(std::move(p)) { t_ = p_->normal_form(t); }

AlgebraElement AlgebraElement::scalar(PresentationPtr p, const QScalar& s) {
    Terms t;
    add_term(t, Word(), s);
    AlgebraElement e;
    e.p_ = std::move(p);
    e.t_ = std::move(t);
    return e;
}

AlgebraElement AlgebraElement::gen(PresentationPtr p, const std::string& name) {
    Word w = p->letter(name);
    return AlgebraElement(std::move(p), Terms{{w, QScalar(1)}});
}

AlgebraElement AlgebraElement::parse(PresentationPtr p, std::string_view text) {
    Terms t = parse_free(text, p->generators(), {{"q", p->q()}});
    return AlgebraElement(std::move(p), t);
}

bool AlgebraElement::is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

QScalar AlgebraElement::scalar_value() const {
    if (!is_scalar()) throw std::logic_error("element is not a scalar");
    return t_.empty() ? QScalar(0) : t_.begin()->second;
}

std::size_t AlgebraElement::degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : t_) d = std::max(d, w.size());
    return d;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
}

static const PresentationPtr& pick(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.presentation() && b.presentation() && a.presentation() != b.presentation())
        throw std::invalid_argument("elements of different algebras");
    return a.presentation() ? a.presentation() : b.presentation();
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    r.p_ = pick(a, b);
    r.t_ = add(a.t_, b.t_);
    return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement r;
    r.p_ = pick(a, b);
    if (!r.p_) return r;
    for (const auto& [w1, c1] : a.t_)
        for (const auto& [w2, c2] : b.t_) {
            QScalar c = c1 * c2;
            for (const auto& [w, c3] : r.p_->normal_form(w1 + w2)) add_term(r.t_, w, c * c3);
        }
    return r;
}

AlgebraElement operator*(const QScalar& s, const AlgebraElement& a) {
    AlgebraElement r;
    r.p_ = a.p_;
    r.t_ = scale(a.t_, s);
    return r;
}

AlgebraElement AlgebraElement::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    AlgebraElement r = scalar(p_, QScalar(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string AlgebraElement::str() const { return p_ ? p_->str(t_) : "0"; }

AlgebraElement commutator(const AlgebraElement& u, const AlgebraElement& v) { return u * v - v * u; }

bool is_central(const AlgebraElement& u) {
    const auto& p = u.presentation();
    for (const auto& g : p->generators())
        if (!commutator(u, AlgebraElement::gen(p, g)).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------- presets

namespace {

PresentationPtr build(const std::string& name, std::vector<std::string> gens, const std::vector<std::string>& rels,
                      const PresetParams& p, std::vector<int> weights = {}) {
    std::map<std::string, QScalar> symbols{{"q", p.q}, {"hbar", p.hbar}, {"C", p.casimir}};
    std::vector<Terms> terms;
    for (const auto& r : rels) terms.push_back(parse_free(r, gens, symbols));
    return Presentation::from_relations(name, std::move(gens), terms, p.q, std::move(weights));
}

const std::vector<std::string> kSlRelations = {
    "q^2*h*b - b*h - (q+q^-1)*hbar*b",
    "q^2*c*h - h*c - (q+q^-1)*hbar*c",
    "(q+q^-1)*q*(b*c - c*b) + (q^2-1)*h^2 - (q+q^-1)*hbar*h",
};

const std::vector<std::string> kCentralL = {"l*b - b*l", "l*h - h*l", "l*c - c*l"};

}  // namespace

std::vector<std::string> preset_names() {
    return {"kq_r3", "kq_r4", "sl_n2", "mrea_n2", "mrea_lhbc", "hyperboloid", "rtt_n2"};
}

PresentationPtr preset(const std::string& name, const PresetParams& p) {
    if (name == "kq_r3" || name == "kq_r4") {
        PresetParams z = p;
        z.hbar = QScalar(0);
        std::vector<std::string> rels = kSlRelations;
        if (name == "kq_r3") return build(name, {"b", "h", "c"}, rels, z);
        rels.insert(rels.end(), kCentralL.begin(), kCentralL.end());
        return build(name, {"b", "h", "c", "l"}, rels, z);
    }
    if (name == "sl_n2") return build(name, {"b", "h", "c"}, kSlRelations, p);
    if (name == "mrea_lhbc") {
        std::vector<std::string> rels = {
            "q^2*h*b - b*h + (q-q^-1)*l*b - (q+q^-1)*hbar*b",
            "q^2*c*h - h*c + (q-q^-1)*l*c - (q+q^-1)*hbar*c",
            "(q+q^-1)*q*(b*c - c*b) + (q^2-1)*h^2 + (q-q^-1)*l*h - (q+q^-1)*hbar*h",
        };
        rels.insert(rels.end(), kCentralL.begin(), kCentralL.end());
        // l is the largest letter but carries weight 0, so the ħ-free quadratic words lead
        return build(name, {"b", "h", "c", "l"}, rels, p, {1, 1, 1, 0});
    }
    if (name == "mrea_n2") {
        return build(name, {"a", "b", "c", "d"},
                     {
                         "q*a*b - q^-1*b*a - hbar*b",
                         "q*c*a - q^-1*a*c - hbar*c",
                         "a*d - d*a",
                         "q*(b*c - c*b) - (q-q^-1)*a*(d - a) - hbar*(a - d)",
                         "q*(c*d - d*c) - (q-q^-1)*c*a + hbar*c",
                         "q*(d*b - b*d) - (q-q^-1)*a*b + hbar*b",
                     },
                     p);
    }
    if (name == "hyperboloid") {
        if (p.casimir.is_zero()) throw std::invalid_argument("hyperboloid needs a nonzero Casimir value");
        std::vector<std::string> rels = kSlRelations;
        rels.push_back("q^-1*b*c + h^2/(q+q^-1) + q*c*b - C");
        auto out = build(name, {"b", "h", "c"}, rels, p);
        std::const_pointer_cast<Presentation>(out)->expected_count = [](std::size_t d) { return d == 0 ? 1 : 2 * d + 1; };
        return out;
    }
    if (name == "rtt_n2") {
        // b < c < a < d keeps b^i c^j a^k, b^i c^j d^k as the normal words
        auto out = build(name, {"b", "c", "a", "d"},
                         {"a*b - q*b*a", "a*c - q*c*a", "b*d - q*d*b", "b*c - c*b", "c*d - q*d*c",
                          "a*d - q*b*c - 1", "d*a - q^-1*b*c - 1"},
                         p);
        std::const_pointer_cast<Presentation>(out)->expected_count = [](std::size_t d) {
            return d == 0 ? std::size_t{1} : binomial(d + 2, 2) + binomial(d + 1, 2);
        };
        return out;
    }
    throw UnknownPreset("unknown preset '" + name + "'");
}

std::string mrea_generator_name(std::size_t n, std::size_t i, std::size_t j) {
    if (n == 2) return std::string(1, static_cast<char>('a' + i * 2 + j));
    return "L" + std::to_string(i + 1) + std::to_string(j + 1);
}

PresentationPtr mrea_from_R(const HeckeSymmetry& h, const QScalar& hbar) {
    const std::size_t n = h.n, N = n * n;
    std::vector<std::string> gens;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gens.push_back(mrea_generator_name(n, i, j));
    using TMat = std::vector<Terms>;  // N x N row major
    auto mul = [&](const TMat& a, const TMat& b) {
        TMat c(N * N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                if (a[i * N + k].empty()) continue;
                for (std::size_t j = 0; j < N; ++j)
                    if (!b[k * N + j].empty()) c[i * N + j] = add(c[i * N + j], free_mul(a[i * N + k], b[k * N + j]));
            }
        return c;
    };
    TMat r(N * N), l1(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (!h.R(i, j).is_zero()) r[i * N + j] = Terms{{Word(), h.R(i, j)}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a)
                l1[(i * n + a) * N + (j * n + a)] = Terms{{Word(1, static_cast<char>(i * n + j)), QScalar(1)}};
    TMat rl = mul(r, l1), lr = mul(l1, r);
    TMat lhs = mul(rl, rl), rhs = mul(lr, lr);
    std::vector<Terms> rels;
    for (std::size_t k = 0; k < N * N; ++k) {
        Terms t = add(lhs[k], scale(rhs[k], QScalar(-1)));
        t = add(t, scale(add(rl[k], scale(lr[k], QScalar(-1))), -hbar));
        if (!t.empty()) rels.push_back(std::move(t));
    }
    return Presentation::from_relations("mrea(" + h.name + ")", gens, rels, h.q);
}

bool is_homomorphism(const Presentation& from, const std::vector<AlgebraElement>& images, std::string* witness) {
    if (images.size() != from.ngens()) throw std::invalid_argument("one image per generator");
    if (images.empty()) return true;
    const auto& target = images[0].presentation();
    for (const auto& rel : from.relations()) {
        AlgebraElement acc = AlgebraElement::scalar(target, QScalar(0));
        for (const auto& [w, c] : rel) {
            AlgebraElement m = AlgebraElement::scalar(target, c);
            for (char ch : w) m = m * images[static_cast<unsigned char>(ch)];
            acc += m;
        }
        if (!acc.is_zero()) {
            if (witness) *witness = from.str(rel) + " maps to " + acc.str();
            return false;
        }
    }
    return true;
}

bool same_relations(const Presentation& a, const Presentation& b) {
    if (a.ngens() != b.ngens() || a.rules().size() != b.rules().size()) return false;
    for (std::size_t i = 0; i < a.rules().size(); ++i)
        if (a.rules()[i].lead != b.rules()[i].lead || a.rules()[i].tail != b.rules()[i].tail) return false;
    return true;
}

// ---------------------------------------------------------------- PBW

std::size_t count_irreducible(const Presentation& p, std::size_t degree) {
    std::size_t count = 0;
    Word w;
    std::function<void()> rec = [&]() {
        if (w.size() == degree) {
            ++count;
            return;
        }
        for (std::size_t g = 0; g < p.ngens(); ++g) {
            w.push_back(static_cast<char>(g));
            bool ok = true;
            for (std::size_t len = 2; len <= w.size() && ok; ++len) {
                Word suffix = w.substr(w.size() - len);
                for (const auto& r : p.rules())
                    if (r.lead == suffix) {
                        ok = false;
                        break;
                    }
            }
            if (ok) rec();
            w.pop_back();
        }
    };
    rec();
    return count;
}

PbwReport pbw_check(const Presentation& p, std::size_t max_degree) {
    PbwReport rep;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        PbwDegree deg;
        deg.degree = d;
        deg.count = count_irreducible(p, d);
        deg.expected = p.expected_count(d);
        for (const auto& r1 : p.rules()) {
            for (const auto& r2 : p.rules()) {
                for (std::size_t ov = 1; ov < r1.lead.size() && ov < r2.lead.size(); ++ov) {
                    if (r1.lead.size() + r2.lead.size() - ov != d) continue;
                    if (r1.lead.substr(r1.lead.size() - ov) != r2.lead.substr(0, ov)) continue;
                    Word u = r1.lead.substr(0, r1.lead.size() - ov);
                    Word w = r2.lead.substr(ov);
                    Terms left = p.normal_form(free_mul(r1.tail, Terms{{w, QScalar(1)}}));
                    Terms right = p.normal_form(free_mul(Terms{{u, QScalar(1)}}, r2.tail));
                    Terms diff = add(left, scale(right, QScalar(-1)));
                    if (!diff.empty() && deg.confluent) {
                        deg.confluent = false;
                        deg.witness = "overlap " + p.word_str(u + r1.lead.substr(r1.lead.size() - ov) + w) +
                                      " resolves to " + p.str(diff) + " != 0";
                    }
                }
            }
        }
        if (deg.count != deg.expected && deg.witness.empty())
            deg.witness = "degree " + std::to_string(d) + ": " + std::to_string(deg.count) + " normal words, expected " +
                          std::to_string(deg.expected);
        if ((!deg.confluent || deg.count != deg.expected) && rep.pass) {
            rep.pass = false;
            rep.witness = deg.witness;
        }
        rep.degrees.push_back(deg);
    }
    return rep;
}

// ---------------------------------------------------------------- commutative side

std::string comm_str(const CommPoly& p, const std::vector<std::string>& names) {
    if (p.empty()) return "0";
    std::string out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += '*';
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        mpq_class a = abs(c);
        std::string body = mono.empty() ? a.get_str() : (a == 1 ? mono : a.get_str() + "*" + mono);
        if (out.empty())
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
    }
    return out;
}

CommPoly comm_add(const CommPoly& a, const CommPoly& b, const mpq_class& sb) {
    CommPoly r = a;
    for (const auto& [e, c] : b) {
        mpq_class& x = r[e];
        x += sb * c;
        if (x == 0) r.erase(e);
    }
    return r;
}

CommPoly comm_mul(const CommPoly& a, const CommPoly& b) {
    CommPoly r;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
            std::vector<int> e(std::max(e1.size(), e2.size()), 0);
            for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
            for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
            mpq_class& x = r[e];
            x += c1 * c2;
            if (x == 0) r.erase(e);
        }
    return r;
}

CommPoly comm_diff(const CommPoly& a, std::size_t var) {
    CommPoly r;
    for (const auto& [e, c] : a) {
        if (var >= e.size() || e[var] == 0) continue;
        std::vector<int> f = e;
        f[var] -= 1;
        r[f] += c * e[var];
    }
    return r;
}

CommPoly poisson_extend(const std::vector<std::vector<CommPoly>>& table, const CommPoly& f, const CommPoly& g) {
    CommPoly out;
    for (std::size_t i = 0; i < table.size(); ++i) {
        CommPoly fi = comm_diff(f, i);
        if (fi.empty()) continue;
        for (std::size_t j = 0; j < table.size(); ++j) {
            CommPoly gj = comm_diff(g, j);
            if (gj.empty()) continue;
            out = comm_add(out, comm_mul(comm_mul(fi, gj), table[i][j]));
        }
    }
    return out;
}

SemiclassicalBracket semiclassical_bracket(const PresentationFamily& family, const std::string& u, const std::string& v,
                                           int hbar_degree) {
    using QComm = std::map<std::vector<int>, QScalar>;
    auto sample = [&](int hb) {
        PresentationPtr p = family(QScalar(hb));
        AlgebraElement c = commutator(AlgebraElement::gen(p, u), AlgebraElement::gen(p, v));
        QComm out;
        for (const auto& [w, coef] : c.terms()) {
            std::vector<int> e(p->ngens(), 0);
            for (char ch : w) e[static_cast<unsigned char>(ch)]++;
            QScalar& x = out[e];
            x += coef;
            if (x.is_zero()) out.erase(e);
        }
        return out;
    };
    const int D = hbar_degree;
    std::vector<QComm> f;
    for (int i = 0; i <= D + 1; ++i) f.push_back(sample(i));
    // Lagrange weights on nodes 0..D: values at D + 1 and derivatives at 0
    std::vector<mpq_class> at_next(D + 1), deriv(D + 1);
    for (int i = 0; i <= D; ++i) {
        mpq_class den = 1, num = 1;
        for (int k = 0; k <= D; ++k)
            if (k != i) {
                den *= (i - k);
                num *= (D + 1 - k);
            }
        at_next[i] = num / den;
        mpq_class s = 0;
        for (int skip = 0; skip <= D; ++skip) {
            if (skip == i) continue;
            mpq_class term = 1;
            for (int k = 0; k <= D; ++k)
                if (k != i && k != skip) term *= (0 - k);
            s += term;
        }
        deriv[i] = s / den;
    }
    QComm predicted;
    QComm dh;
    for (int i = 0; i <= D; ++i)
        for (const auto& [e, c] : f[i]) {
            predicted[e] += QScalar(at_next[i]) * c;
            dh[e] += QScalar(deriv[i]) * c;
        }
    for (auto it = predicted.begin(); it != predicted.end();)
        it = it->second.is_zero() ? predicted.erase(it) : std::next(it);
    if (predicted != f[D + 1]) throw std::runtime_error("commutator is not polynomial of the assumed degree in hbar");
    SemiclassicalBracket out;
    for (const auto& [e, c] : dh) {
        mpq_class x = limit_coefficient(c, 0);
        if (x != 0) out.hbar_part[e] = x;
    }
    for (const auto& [e, c] : f[0]) {
        mpq_class x = limit_coefficient(c, 1);
        if (x != 0) out.q_part[e] = x;
    }
    return out;
}

}  // namespace braidkit
