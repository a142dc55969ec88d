#pragma once

#include "braidkit/braiding.hpp"
#include "braidkit/scalars.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace braidkit {

struct NonOrientable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownPreset : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A word is a string of generator indices, one char per letter.
using Word = std::string;
// A noncommutative polynomial with no reduction applied.
using Terms = std::map<Word, QScalar>;

void add_term(Terms& t, const Word& w, const QScalar& c);
Terms add(const Terms& a, const Terms& b);
Terms scale(const Terms& a, const QScalar& s);
// concatenation product, no reduction
Terms free_mul(const Terms& a, const Terms& b);

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

struct Rule {
    Word lead;
    Terms tail;
};

// Generators plus oriented rewriting rules lead -> tail. Rules are the reduced echelon basis
// of the defining relations with respect to the monomial order (length, weight, lex).
class Presentation : public std::enable_shared_from_this<Presentation> {
public:
    static PresentationPtr from_relations(std::string name, std::vector<std::string> generators,
                                          const std::vector<Terms>& relations, const QScalar& q,
                                          std::vector<int> weights = {});

    const std::string& name() const { return name_; }
    const std::vector<std::string>& generators() const { return gens_; }
    std::size_t ngens() const { return gens_.size(); }
    int index_of(const std::string& g) const;
    Word letter(const std::string& g) const { return Word(1, static_cast<char>(index_of(g))); }
    const QScalar& q() const { return q_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const std::vector<int>& weights() const { return weights_; }

    // strict monomial order
    bool less(const Word& a, const Word& b) const;
    bool is_irreducible(const Word& w) const;
    Terms normal_form(const Word& w) const;
    Terms normal_form(const Terms& t) const;
    // the defining relations as lead - tail
    std::vector<Terms> relations() const;

    std::string word_str(const Word& w) const;
    std::string str(const Terms& t) const;

    // dimension of the span of normal words of exact length d expected from the associated graded algebra
    std::function<std::size_t(std::size_t)> expected_count;

    std::string to_json() const;
    static PresentationPtr from_json(const std::string& text, const QScalar& q = QScalar::q());

private:
    Presentation() = default;
    int weight(const Word& w) const;
    const Terms* rule_for(const Word& w) const;
    Terms reduce_product(char x, const Word& normal) const;

    std::string name_;
    std::vector<std::string> gens_;
    std::vector<int> weights_;
    QScalar q_;
    std::vector<Rule> rules_;
    std::unordered_map<Word, std::size_t> lead_index_;
    std::size_t max_lead_ = 0;
    mutable std::mutex mu_;
    mutable std::unordered_map<Word, Terms> memo_;
};

// An element of the algebra, always in normal form.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(PresentationPtr p, Terms t);
    static AlgebraElement scalar(PresentationPtr p, const QScalar& s);
    static AlgebraElement gen(PresentationPtr p, const std::string& name);
    static AlgebraElement parse(PresentationPtr p, std::string_view text);

    const PresentationPtr& presentation() const { return p_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    // the constant term when the element is a scalar
    bool is_scalar() const;
    QScalar scalar_value() const;
    std::size_t degree() const;

    AlgebraElement operator-() const;
    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    friend AlgebraElement operator*(const QScalar& s, const AlgebraElement& a);
    AlgebraElement& operator+=(const AlgebraElement& b) { return *this = *this + b; }
    AlgebraElement& operator-=(const AlgebraElement& b) { return *this = *this - b; }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.t_ == b.t_; }
    AlgebraElement pow(int k) const;

    std::string str() const;

private:
    PresentationPtr p_;
    Terms t_;
};

AlgebraElement commutator(const AlgebraElement& u, const AlgebraElement& v);
bool is_central(const AlgebraElement& u);

// Named presets; parameters not used by a preset are ignored.
struct PresetParams {
    QScalar q = QScalar::q();
    QScalar hbar = QScalar(1);
    QScalar casimir = QScalar(1);
};
PresentationPtr preset(const std::string& name, const PresetParams& params = {});
std::vector<std::string> preset_names();

// The modified reflection equation algebra of a Hecke symmetry.
PresentationPtr mrea_from_R(const HeckeSymmetry& h, const QScalar& hbar);
// generator names used for L_i^j
std::string mrea_generator_name(std::size_t n, std::size_t i, std::size_t j);

// Whether generator images define an algebra map from `from` into the target presentation.
bool is_homomorphism(const Presentation& from, const std::vector<AlgebraElement>& images, std::string* witness = nullptr);
// Same relation span, generator for generator.
bool same_relations(const Presentation& a, const Presentation& b);

struct PbwDegree {
    std::size_t degree = 0;
    std::size_t count = 0;
    std::size_t expected = 0;
    bool confluent = true;
    std::string witness;
};
struct PbwReport {
    bool pass = true;
    std::vector<PbwDegree> degrees;
    std::string witness;  // first failure
};
PbwReport pbw_check(const Presentation& p, std::size_t max_degree);
std::size_t count_irreducible(const Presentation& p, std::size_t degree);

// Commutative polynomials with rational coefficients, keyed by exponent vectors.
using CommPoly = std::map<std::vector<int>, mpq_class>;
std::string comm_str(const CommPoly& p, const std::vector<std::string>& names);
CommPoly comm_mul(const CommPoly& a, const CommPoly& b);
CommPoly comm_add(const CommPoly& a, const CommPoly& b, const mpq_class& sb = 1);
CommPoly comm_diff(const CommPoly& a, std::size_t var);

struct SemiclassicalBracket {
    CommPoly hbar_part;
    CommPoly q_part;
};
using PresentationFamily = std::function<PresentationPtr(const QScalar& hbar)>;
// first-order coefficients of u v - v u in hbar at (q = 1, hbar = 0) and in q at hbar = 0
SemiclassicalBracket semiclassical_bracket(const PresentationFamily& family, const std::string& u,
                                           const std::string& v, int hbar_degree = 2);
// extends a bracket on generators to polynomials by the Leibniz rule
CommPoly poisson_extend(const std::vector<std::vector<CommPoly>>& table, const CommPoly& f, const CommPoly& g);

}  // namespace braidkit
