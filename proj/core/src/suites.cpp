#include "braidkit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <thread>

namespace braidkit {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

struct Task {
    std::function<std::vector<CheckReport>()> run;
};

CheckReport make(std::string id, bool pass, std::string witness = {}, Params params = {}) {
    CheckReport r;
    r.id = std::move(id);
    r.status = pass ? CheckStatus::pass : CheckStatus::fail;
    if (!pass) r.witness = witness.empty() ? "identity does not hold" : std::move(witness);
    r.params = std::move(params);
    return r;
}

CheckReport from_check(const std::string& prefix, const CheckResult& c, Params params = {}) {
    return make(prefix + c.name, c.pass, c.witness, std::move(params));
}

CheckReport from_item(const std::string& prefix, const CheckItem& c) { return make(prefix + c.id, c.pass, c.witness); }

std::vector<CheckReport> execute(std::vector<Task> tasks, unsigned jobs) {
    std::vector<std::vector<CheckReport>> results(tasks.size());
    auto run_one = [&](std::size_t t) {
        auto start = std::chrono::steady_clock::now();
        std::vector<CheckReport> out;
        try {
            out = tasks[t].run();
        } catch (const std::exception& e) {
            out.push_back(make("task " + std::to_string(t), false, std::string("exception: ") + e.what()));
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        for (auto& r : out) r.seconds = secs / static_cast<double>(out.size());
        results[t] = std::move(out);
    };
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) run_one(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < std::min<std::size_t>(jobs, tasks.size()); ++j)
            pool.emplace_back([&] {
                for (std::size_t t; (t = next++) < tasks.size();) run_one(t);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<CheckReport> flat;
    for (auto& r : results)
        for (auto& c : r) flat.push_back(std::move(c));
    return flat;
}

std::vector<std::size_t> sizes(const SuiteParams& p) {
    if (p.n != 0) return {p.n};
    return {2, 3};
}

std::vector<int> k_range(const SuiteParams& p, int lo, int hi) {
    if (p.k != 0) return {p.k};
    std::vector<int> ks;
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
}

std::string label(const QScalar& s, const SuiteParams& p) {
    if (!p.q) return s.str();
    return eval_at(s, *p.q).get_str();
}

Matrix unit(std::size_t n, std::size_t i, std::size_t j, const QScalar& v) {
    Matrix m(n, n);
    m(i, j) = v;
    return m;
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

QScalar SuiteParams::q_scalar(bool forbid_classical) const {
    if (!q) return QScalar::q();
    if (*q == 0) throw ParameterError("q = 0 is not allowed");
    if (forbid_classical && (*q == 1 || *q == -1)) throw ParameterError("this check needs q != ±1");
    return QScalar(*q);
}

std::string SuiteParams::q_label() const { return q ? q->get_str() : "symbolic"; }

std::optional<mpq_class> parse_q_mode(const std::string& text) {
    if (text.empty() || text == "symbolic") return std::nullopt;
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw ParameterError("--q expects 'symbolic' or a rational, got '" + text + "'");
    v.canonicalize();
    if (v == 0) throw ParameterError("q = 0 is not allowed");
    return v;
}

std::size_t capped_degree(std::size_t requested) {
    const char* env = std::getenv("BRAIDKIT_DMAX");
    if (!env || !*env) return requested;
    char* end = nullptr;
    unsigned long cap = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0') throw ParameterError("BRAIDKIT_DMAX must be a nonnegative integer");
    return std::min<std::size_t>(requested, cap);
}

std::vector<std::string> suite_names() {
    return {"ybe", "hecke", "rep", "braided-lie", "ch", "index", "waveops", "pbw", "semiclassical"};
}

bool all_pass(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const CheckReport& r) { return r.status != CheckStatus::fail; });
}

// ---------------------------------------------------------------- braiding

static std::vector<Task> ybe_tasks(const SuiteParams& p) {
    const QScalar q = p.q_scalar();
    std::vector<Task> tasks;
    for (std::size_t n : sizes(p))
        tasks.push_back({[n, q] {
            HeckeSymmetry h = standard_R(n, q);
            const std::string pre = "n=" + std::to_string(n) + " ";
            std::vector<CheckReport> out;
            for (const auto& c : validate(h))
                if (c.id != "hecke") out.push_back(from_item(pre, c));
            if (n == 2) out.push_back(make(pre + "B = diag(q^-1, q^-3)", h.B == Matrix::diag({q.pow(-1), q.pow(-3)})));
            return out;
        }});
    return tasks;
}

static std::vector<Task> hecke_tasks(const SuiteParams& p) {
    const QScalar q = p.q_scalar();
    std::vector<Task> tasks;
    for (std::size_t n : sizes(p))
        tasks.push_back({[n, q] {
            HeckeSymmetry h = standard_R(n, q);
            const std::string pre = "n=" + std::to_string(n) + " ";
            std::vector<CheckReport> out;
            for (const auto& c : validate(h))
                if (c.id == "hecke") out.push_back(from_item(pre, c));
            BiRank b = birank_detect(h, n + 2);
            out.push_back(make(pre + "bi-rank (n|0)", b == BiRank{static_cast<int>(n), 0},
                               "detected (" + std::to_string(b.m) + "|" + std::to_string(b.n) + ")"));
            Matrix bc = h.B * h.C - q.pow(-2 * static_cast<int>(n)) * Matrix::identity(n);
            out.push_back(make(pre + "B C = q^-2n Id", bc.is_zero(), bc.first_nonzero()));
            return out;
        }});
    for (std::size_t n : {2u, 3u})
        tasks.push_back({[n] {
            std::vector<CheckReport> out;
            for (const auto& c : validate(flip(n)))
                if (c.id == "hecke") out.push_back(from_item("flip(" + std::to_string(n) + ") ", c));
            return out;
        }});
    return tasks;
}

// ---------------------------------------------------------------- representations

std::vector<CheckReport> rep_reports(const SuiteParams& p) {
    const QScalar q = p.q_scalar();
    std::vector<Task> tasks;
    const bool all = p.rep == "all";
    if (!all && p.rep != "rhoV" && p.rep != "rhoVstar" && p.rep != "pik")
        throw ParameterError("--rep expects rhoV, rhoVstar or pik");
    if (all || p.rep == "rhoV")
        tasks.push_back({[q] {
            HeckeSymmetry h = standard_R(2, q);
            Representation v = rho_V(h);
            RepCheck rc = check_rep(v);
            std::vector<CheckReport> out{make("rhoV representation", rc.pass, rc.witness)};
            bool explicit_ok = v.image("a") == unit(2, 0, 0, q.pow(-1)) && v.image("b") == unit(2, 0, 1, q.pow(-3)) &&
                               v.image("c") == unit(2, 1, 0, q.pow(-1)) && v.image("d") == unit(2, 1, 1, q.pow(-3));
            out.push_back(make("rhoV explicit matrices", explicit_ok));
            std::string w;
            out.push_back(make("rhoV equivariant", equivariant(v, &w), w));
            SlReduction s = sl_reduce_rep(v);
            QScalar wq = (q * q + QScalar(1)) / (q.pow(4) + QScalar(1));
            bool reduced = s.rep.image("b") == unit(2, 0, 1, wq * q.inv()) &&
                           s.rep.image("h") == unit(2, 0, 0, wq * q) + unit(2, 1, 1, -wq * q.inv()) &&
                           s.rep.image("c") == unit(2, 1, 0, wq * q);
            out.push_back(make("sl-reduced rhoV, w = (q^2+1)/(q^4+1)", reduced && check_rep(s.rep).pass));
            for (std::size_t n : {3u}) {
                RepCheck r3 = check_rep(rho_V(standard_R(n, q)));
                out.push_back(make("rhoV representation n=" + std::to_string(n), r3.pass, r3.witness));
            }
            return out;
        }});
    if (all || p.rep == "rhoVstar")
        tasks.push_back({[q] {
            RepCheck rc = check_rep(rho_Vstar(standard_R(2, q)));
            return std::vector<CheckReport>{make("rhoVstar representation", rc.pass, rc.witness)};
        }});
    if (all || p.rep == "pik")
        for (int k : k_range(p, 1, 4))
            tasks.push_back({[k, q] {
                HeckeSymmetry h = standard_R(2, q);
                Representation m = symmetric_module(h, static_cast<std::size_t>(k));
                RepCheck rc = check_rep(m);
                const std::string pre = "pi_" + std::to_string(k) + " ";
                std::vector<CheckReport> out{make(pre + "representation", rc.pass, rc.witness)};
                out.push_back(make(pre + "qdim = (k+1)_q", qdim(m) == qint(k + 1, q)));
                return out;
            }});
    if (all)
        tasks.push_back({[q] {
            HeckeSymmetry h = standard_R(2, q);
            Matrix k = copies_basis(h).K;
            BraidedBracket br = bracket(h);
            Representation vv = tensor_rep(rho_V(h), rho_Vstar(h));
            bool adj = true;
            for (std::size_t g = 0; g < 4; ++g) adj = adj && br.adjoint().images[g] == vv.images[g];
            return std::vector<CheckReport>{make("copies basis invertible", rank(k) == k.rows()),
                                            make("adjoint action through V ⊗ V*", adj)};
        }});
    return execute(std::move(tasks), p.jobs);
}

std::vector<CheckReport> casimir_reports(const SuiteParams& p) {
    const QScalar q = p.q_scalar(true);
    std::vector<Task> tasks;
    for (int k : k_range(p, 1, 4))
        tasks.push_back({[k, q, p] {
            QScalar got = casimir_on_module(standard_R(2, q), static_cast<std::size_t>(k));
            QScalar want = casimir_value(k, q);
            return std::vector<CheckReport>{make("Casimir on V_" + std::to_string(k), got == want, "value " + got.str(),
                                                 {{"value", label(got, p)}, {"expected", label(want, p)}})};
        }});
    return execute(std::move(tasks), p.jobs);
}

// ---------------------------------------------------------------- quantum matrices and bundles

std::vector<CheckReport> central_reports(const SuiteParams& p) {
    const QScalar q = p.q_scalar();
    const int kmax = p.k != 0 ? p.k : 3;
    std::vector<Task> tasks;
    tasks.push_back({[q, p] {
        PresetParams pp;
        pp.q = q;
        pp.hbar = p.hbar;
        auto lh = preset("mrea_lhbc", pp);
        return std::vector<CheckReport>{make("l central in mrea_lhbc", is_central(AlgebraElement::gen(lh, "l"))),
                                        make("Cas central in mrea_lhbc", is_central(lhbc_casimir(lh))),
                                        make("b not central in mrea_lhbc", !is_central(AlgebraElement::gen(lh, "b")))};
    }});
    for (int k = 0; k <= kmax; ++k)
        tasks.push_back({[k, q, p] {
            HeckeSymmetry h = standard_R(2, q);
            auto m = mrea_from_R(h, p.hbar);
            AlgMatrix l = AlgMatrix::generators(m, 2);
            return std::vector<CheckReport>{
                make("p_" + std::to_string(k) + "(L) central", is_central(power_sum(h, l, k)), {}, {{"hbar", p.hbar.str()}})};
        }});
    return execute(std::move(tasks), p.jobs);
}

std::vector<CheckReport> ch_reports(const SuiteParams& p) {
    const QScalar q = p.q_scalar(true);
    std::vector<Task> tasks;
    tasks.push_back({[q, p] {
        std::vector<CheckReport> out;
        for (const QScalar& hbar : {QScalar(0), QScalar(1), p.hbar}) {
            PresetParams pp;
            pp.q = q;
            pp.hbar = hbar;
            AlgMatrix res = cayley_hamilton_residual(preset("sl_n2", pp), hbar);
            out.push_back(make("Cayley-Hamilton identity", res.is_zero(), res.str(), {{"hbar", hbar.str()}}));
        }
        return out;
    }});
    // the idempotents live over Q(q); a numeric q only changes how values are reported
    for (int k : k_range(p, 1, 4))
        tasks.push_back({[k, p] {
            QScalar C = casimir_value(k);
            ChIdempotents ch = ch_idempotents(QScalar(1), C);
            auto alg = ch.e0.e.presentation();
            Params pr{{"k", std::to_string(k)}, {"C", label(C, p)}};
            return std::vector<CheckReport>{
                make("e0^2 = e0", ch.e0.idempotent(), {}, pr),
                make("e1^2 = e1", ch.e1.idempotent(), {}, pr),
                make("e0 + e1 = Id", ch.e0.e + ch.e1.e == AlgMatrix::identity(alg, 2), {}, pr),
                make("e0 e1 = 0", (ch.e0.e * ch.e1.e).is_zero(), {}, pr),
            };
        }});
    return execute(std::move(tasks), p.jobs);
}

IndexValue q_index_value(int k, int i) {
    if (k < 1) throw ParameterError("the index needs k >= 1");
    if (i != 0 && i != 1) throw ParameterError("--i expects 0 or 1");
    QScalar C = casimir_value(k);
    ChIdempotents ch = ch_idempotents(QScalar(1), C);
    IndexValue v;
    v.value = q_index(index_module(static_cast<std::size_t>(k)), i == 0 ? ch.e0 : ch.e1, C);
    v.expected = qint(i == 0 ? k + 2 : k);
    v.match = v.value == v.expected;
    return v;
}

static std::vector<Task> index_tasks(const SuiteParams& p) {
    std::vector<Task> tasks;
    std::vector<int> is = p.i < 0 ? std::vector<int>{0, 1} : std::vector<int>{p.i};
    for (int k : k_range(p, 2, 4))
        for (int i : is)
            tasks.push_back({[k, i, p] {
                IndexValue v = q_index_value(k, i);
                Params pr{{"k", std::to_string(k)},
                          {"i", std::to_string(i)},
                          {"value", label(v.value, p)},
                          {"expected", label(v.expected, p)}};
                std::vector<CheckReport> out{make("Ind_q(pi_k, e_i)", v.match, "value " + v.value.str(), pr)};
                mpq_class at1 = eval_at(v.value, 1);
                out.push_back(make("classical index", at1 == (i == 0 ? k + 2 : k), "value " + at1.get_str(), pr));
                return out;
            }});
    return tasks;
}

// ---------------------------------------------------------------- braided Lie algebras

static std::vector<Task> glie_tasks(const SuiteParams& p);

std::vector<CheckReport> braided_lie_reports(const SuiteParams& p) {
    const QScalar q = p.q_scalar(true);
    std::vector<Task> tasks;
    for (std::size_t n : sizes(p))
        tasks.push_back({[n, q] {
            HeckeSymmetry h = standard_R(n, q);
            const std::string pre = "n=" + std::to_string(n) + " ";
            std::vector<CheckReport> out;
            for (const auto& c : q_operator_checks(h)) out.push_back(from_check(pre, c));
            for (const auto& c : theorem_checks(bracket(h))) out.push_back(from_check(pre, c));
            return out;
        }});
    tasks.push_back({[q] {
        HeckeSymmetry h = standard_R(2, q);
        QScalar w = qint(2, q) / (q * q);
        std::vector<CheckReport> out;
        Matrix diff = sl_table(h) - sl_table_reference(w, q);
        out.push_back(make("sl table with w = 2_q/q^2", diff.is_zero(), diff.first_nonzero()));
        for (const QScalar& wv : {QScalar(1), w}) {
            RepCheck rc = check_rep(adjoint_module(wv, q));
            out.push_back(make("adjoint module", rc.pass, rc.witness, {{"w", wv.str()}}));
        }
        RepCheck bad = check_rep(sl_adjoint(h));
        CheckReport r = make("sl-restricted ad is not a representation (expected failure)", !bad.pass,
                             "the restricted adjoint satisfies the relations");
        if (!bad.pass) r.params.push_back({"observed", bad.witness});
        out.push_back(r);
        return out;
    }});
    for (auto& t : glie_tasks(p)) tasks.push_back(std::move(t));
    return execute(std::move(tasks), p.jobs);
}

static std::vector<Task> glie_tasks(const SuiteParams& p) {
    std::vector<Task> tasks;
    if (p.preset != "all" && p.preset != "flip" && p.preset != "super")
        throw ParameterError("--preset expects flip or super");
    if (p.preset != "super")
        tasks.push_back({[] {
            std::vector<CheckReport> out;
            for (std::size_t n : {2u, 3u})
                for (const auto& c : glie_axiom_check(flip(n)))
                    out.push_back(from_check("flip(" + std::to_string(n) + ") gLie axiom ", c));
            return out;
        }});
    if (p.preset != "flip")
        tasks.push_back({[] {
            std::vector<CheckReport> out;
            for (const auto& c : glie_axiom_check(superflip(1, 1))) out.push_back(from_check("superflip(1,1) gLie axiom ", c));
            return out;
        }});
    return tasks;
}

std::vector<CheckReport> glie_reports(const SuiteParams& p) { return execute(glie_tasks(p), p.jobs); }

// ---------------------------------------------------------------- wave operators

std::vector<CheckReport> waveops_reports(const SuiteParams& p) {
    const QScalar q = p.q_scalar(true);
    const std::size_t d = capped_degree(p.dmax);
    if (d < 2) throw ParameterError("waveops needs a degree bound of at least 2");
    const std::string alg = p.algebra, op = p.op;
    if (alg != "all" && alg != "r3" && alg != "r4" && alg != "h2") throw ParameterError("--algebra expects r3, r4 or h2");
    if (op != "all" && op != "laplace" && op != "dirac" && op != "maxwell")
        throw ParameterError("--op expects laplace, dirac or maxwell");
    const bool r3 = alg == "all" || alg == "r3", r4 = alg == "all" || alg == "r4", h2 = alg == "all" || alg == "h2";
    const bool lap = op == "all" || op == "laplace", dir = op == "all" || op == "dirac", mw = op == "all" || op == "maxwell";
    const QScalar eps = p.epsilon;
    if (eps.is_zero()) throw ParameterError("epsilon must be nonzero");
    Params pr{{"dmax", std::to_string(d)}, {"epsilon", eps.str()}, {"q", p.q_label()}};
    auto sp3 = [d, q] { return shared_canonicalizer(WaveAlgebra::kq_r3, d, q); };
    auto sp4 = [d, q] { return shared_canonicalizer(WaveAlgebra::kq_r4, d, q); };
    auto wrap = [pr](const std::string& pre, const std::vector<CheckResult>& cs) {
        std::vector<CheckReport> out;
        for (const auto& c : cs) out.push_back(from_check(pre, c, pr));
        return out;
    };

    std::vector<Task> tasks;
    if (r3 || r4)
        tasks.push_back({[=] {
            std::vector<CheckReport> out;
            if (r3) {
                out.push_back(from_check("r3 ", orthogonality_check(standard_pairing(false, QScalar(1), q), sl_plus(q), sl_minus(q)), pr));
                for (auto& c : wrap("r3 ", derivative_algebra_check(sp3(), standard_pairing(false, QScalar(1), q)))) out.push_back(c);
            }
            if (r4) {
                out.push_back(from_check("r4 ", orthogonality_check(standard_pairing(true, eps, q), slt_plus(q), slt_minus(q)), pr));
                for (auto& c : wrap("r4 ", derivative_algebra_check(sp4(), standard_pairing(true, eps, q)))) out.push_back(c);
            }
            return out;
        }});
    if (lap && r3)
        tasks.push_back({[=] {
            auto s = sp3();
            AlgebraElement b = AlgebraElement::gen(s->algebra, "b"), h = AlgebraElement::gen(s->algebra, "h"),
                           c = AlgebraElement::gen(s->algebra, "c");
            const QScalar t = qint(2, q);
            AlgebraElement cas = q.inv() * (b * c) + t.inv() * (h * h) + q * (c * b);
            AlgebraElement got = laplace3(s)(cas);
            QScalar want = QScalar(2) * q * q + QScalar(2) + QScalar(2) * q.pow(-2);
            return std::vector<CheckReport>{make("r3 Δ(Cas) = 2q^2 + 2 + 2q^-2", got == AlgebraElement::scalar(s->algebra, want),
                                                 got.str(), pr)};
        }});
    if (lap && r4)
        tasks.push_back({[=] {
            auto s = sp4();
            AlgebraElement l = AlgebraElement::gen(s->algebra, "l");
            AlgebraElement got = laplace4(s, eps)(l * l);
            return std::vector<CheckReport>{
                make("r4 Δ(l^2) = 2ε", got == AlgebraElement::scalar(s->algebra, QScalar(2) * eps), got.str(), pr)};
        }});
    if (dir && (r3 || r4))
        tasks.push_back({[=] { return wrap("", dirac_checks(sp3(), sp4(), eps)); }});
    if (mw && r3) tasks.push_back({[=] { return wrap("r3 ", {maxwell_kernel_check(sp3(), QScalar(1), d)}); }});
    if (mw && r4) tasks.push_back({[=] { return wrap("r4 ", {maxwell_kernel_check(sp4(), eps, d)}); }});
    if (h2) {
        tasks.push_back({[=] {
            std::vector<CheckReport> out;
            for (const QScalar& w : {QScalar(1), qint(2, q) / (q * q)}) {
                TangentFields tf = tangent_fields(sp3(), w);
                Params pw = pr;
                pw.push_back({"w", w.str()});
                out.push_back(from_check("h2 ", tangent_relation_check(tf), pw));
            }
            TangentFields tf = tangent_fields(sp3(), QScalar(1));
            for (std::size_t n = 1; n < tf.hbar.size(); ++n) {
                CheckReport r = make("h2 hbar(" + std::to_string(n) + ") solves the sl relations", tf.hbar[n].has_value(),
                                     "no scalar hbar on degree " + std::to_string(n), pr);
                if (tf.hbar[n]) r.params.push_back({"hbar", tf.hbar[n]->str()});
                out.push_back(r);
            }
            return out;
        }});
        if (op == "all") tasks.push_back({[=] { return wrap("h2 ", pseudospherical_check(sp3(), d - 1)); }});
        if (dir)
            tasks.push_back({[=] {
                TangentFields tf = tangent_fields(sp3(), QScalar(1));
                return wrap("h2 ", {dirac_H2_check(tf, std::min<std::size_t>(3, d))});
            }});
        if (mw)
            tasks.push_back({[=] {
                TangentFields tf = tangent_fields(sp3(), QScalar(1));
                return wrap("h2 ", {maxwell_H2_kernel_check(tf, std::min<std::size_t>(2, d))});
            }});
    }
    if (alg == "all" && op == "all") {
        tasks.push_back({[=] {
            auto rea = shared_canonicalizer(WaveAlgebra::rea_full, d, q);
            std::vector<CheckReport> out;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    CheckResult c = operator_equal("dual route ∂_" + std::to_string(i) + "^" + std::to_string(j),
                                                   qprime_partial(rea, i, j), canonical_partial(rea, i, j));
                    out.push_back(from_check("rea ", c, pr));
                }
            return out;
        }});
        tasks.push_back({[=] {
            Matrix sl(4, 3);
            sl(1, 0) = QScalar(1);
            sl(0, 1) = QScalar(1);
            sl(3, 1) = QScalar(-1);
            sl(2, 2) = QScalar(1);
            Subspace sl2 = Subspace::span(kron(sl, sl));
            Subspace img = Subspace::span(build_Qprime(standard_R(2, q)).matrix() * kron(sl, sl));
            // an open question: reported, not asserted
            CheckReport r = make("Q' stability of SL^{⊗2} (probe)", true, {}, pr);
            r.params.push_back({"preserves", sl2.contains(img) ? "true" : "false"});
            r.params.push_back({"image_dim", std::to_string(img.dim())});
            r.params.push_back({"intersection_dim", std::to_string(img.intersect(sl2).dim())});
            return std::vector<CheckReport>{r};
        }});
        tasks.push_back({[=] { return wrap("classical ", classical_checks(d)); }});
    }
    return execute(std::move(tasks), p.jobs);
}

// ---------------------------------------------------------------- PBW and semiclassical

static std::vector<Task> pbw_tasks(const SuiteParams& p) {
    const QScalar q = p.q_scalar();
    const std::size_t d = capped_degree(p.dmax);
    std::vector<Task> tasks;
    auto one = [d](std::string id, PresentationPtr pres, std::size_t deg) {
        return Task{[id, pres, deg] {
            PbwReport r = pbw_check(*pres, deg);
            std::string counts;
            for (const auto& x : r.degrees) counts += (counts.empty() ? "" : ",") + std::to_string(x.count);
            return std::vector<CheckReport>{make(id, r.pass, r.witness, {{"dmax", std::to_string(deg)}, {"counts", counts}})};
        }};
    };
    PresetParams pp;
    pp.q = q;
    pp.hbar = p.hbar;
    tasks.push_back(one("kq_r3 PBW", preset("kq_r3", pp), std::min<std::size_t>(capped_degree(6), std::max<std::size_t>(d, 6))));
    tasks.push_back(one("mrea_n2(1) PBW", mrea_from_R(standard_R(2, q), QScalar(1)), d));
    for (const char* name : {"kq_r4", "sl_n2", "mrea_lhbc", "rtt_n2"})
        tasks.push_back(one(std::string(name) + " PBW", preset(name, pp), d));
    return tasks;
}

static std::vector<Task> semiclassical_tasks(const SuiteParams&) {
    return {Task{[] {
        auto sl = [](const QScalar& hb) {
            PresetParams pp;
            pp.hbar = hb;
            return preset("sl_n2", pp);
        };
        std::vector<std::string> names{"b", "h", "c"};
        std::vector<std::vector<CommPoly>> lie(3, std::vector<CommPoly>(3)), rea = lie;
        bool anti = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                auto s = semiclassical_bracket(sl, names[i], names[j]);
                auto t = semiclassical_bracket(sl, names[j], names[i]);
                anti = anti && comm_add(s.hbar_part, t.hbar_part).empty() && comm_add(s.q_part, t.q_part).empty();
                lie[i][j] = s.hbar_part;
                rea[i][j] = s.q_part;
            }
        auto var = [](int i) {
            std::vector<int> e(3, 0);
            e[static_cast<std::size_t>(i)] = 1;
            return CommPoly{{e, 1}};
        };
        std::vector<CheckReport> out{make("antisymmetry", anti)};
        const char* tags[] = {"hbar-part", "q-part"};
        int t = 0;
        for (const auto* table : {&lie, &rea}) {
            CommPoly x = var(0), y = var(1), z = var(2);
            auto br = [&](const CommPoly& f, const CommPoly& g) { return poisson_extend(*table, f, g); };
            CommPoly jac = comm_add(comm_add(br(x, br(y, z)), br(y, br(z, x))), br(z, br(x, y)));
            out.push_back(make(std::string(tags[t++]) + " Jacobi", jac.empty(), comm_str(jac, names)));
        }
        // [h, b] = 2b, [h, c] = -2c, [b, c] = h
        auto scaled = [&](int i, mpq_class s) {
            CommPoly v = var(i);
            for (auto& [e, c] : v) c *= s;
            return v;
        };
        bool lie_ok = lie[1][0] == scaled(0, 2) && lie[1][2] == scaled(2, -2) && lie[0][2] == scaled(1, 1);
        out.push_back(make("hbar-part is the sl(2) Lie bracket", lie_ok,
                           "[h,b] = " + comm_str(lie[1][0], names) + ", [h,c] = " + comm_str(lie[1][2], names) +
                               ", [b,c] = " + comm_str(lie[0][2], names)));
        return out;
    }}};
}

// ---------------------------------------------------------------- dispatch

std::vector<CheckReport> run_suite(const std::string& name, const SuiteParams& p) {
    if (name == "ybe") return execute(ybe_tasks(p), p.jobs);
    if (name == "hecke") return execute(hecke_tasks(p), p.jobs);
    if (name == "rep") {
        std::vector<CheckReport> out = rep_reports(p);
        if (p.q && (*p.q == 1 || *p.q == -1)) return out;
        for (auto& c : casimir_reports(p)) out.push_back(std::move(c));
        return out;
    }
    if (name == "braided-lie") return braided_lie_reports(p);
    if (name == "ch") {
        std::vector<CheckReport> out = central_reports(p);
        for (auto& c : ch_reports(p)) out.push_back(std::move(c));
        return out;
    }
    if (name == "index") return execute(index_tasks(p), p.jobs);
    if (name == "waveops") return waveops_reports(p);
    if (name == "pbw") return execute(pbw_tasks(p), p.jobs);
    if (name == "semiclassical") return execute(semiclassical_tasks(p), p.jobs);
    throw UnknownSuite("unknown suite '" + name + "'");
}

}  // namespace braidkit
