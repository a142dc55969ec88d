#include "report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace braidkit;
using nlohmann::ordered_json;

namespace {

struct Options {
    std::string q = "symbolic";
    unsigned jobs = 1;
    bool markdown = false;
    bool no_timing = false;
    std::string epsilon = "1";
    std::string hbar = "1";
    std::string casimir = "1";
};

SuiteParams base_params(const Options& o) {
    SuiteParams p;
    p.q = parse_q_mode(o.q);
    p.jobs = std::max(1u, o.jobs);
    p.epsilon = parse_scalar(o.epsilon);
    p.hbar = parse_scalar(o.hbar);
    return p;
}

int emit(const Options& o, std::vector<CheckReport> reports) {
    if (o.no_timing)
        for (auto& r : reports) r.seconds = 0;
    std::cout << (o.markdown ? cli::markdown(reports) : cli::json_lines(reports));
    return all_pass(reports) ? 0 : 1;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"braidkit: exact checks for braided symmetries, quantum matrix algebras and q-wave operators"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--q", o.q, "symbolic or a nonzero rational such as 3/2")->capture_default_str();
    app.add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
    app.add_flag("--markdown", o.markdown, "render a table instead of JSON lines");
    app.add_flag("--no-timing", o.no_timing, "report zero timings");

    SuiteParams sp;
    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a named suite");
    verify->add_option("suite", suite, "ybe, hecke, rep, braided-lie, ch, index, waveops, pbw, semiclassical")->required();
    verify->add_option("--n", sp.n, "size of the standard symmetry");
    verify->add_option("--k", sp.k, "module index");
    verify->add_option("--i", sp.i, "idempotent index");
    verify->add_option("--dmax", sp.dmax, "degree bound")->capture_default_str();
    verify->add_option("--epsilon", o.epsilon, "the ε of K_q[R^4]")->capture_default_str();
    verify->add_option("--hbar", o.hbar, "the ħ parameter")->capture_default_str();
    verify->add_option("--algebra", sp.algebra, "r3, r4, h2 or all")->capture_default_str();
    verify->add_option("--op", sp.op, "laplace, dirac, maxwell or all")->capture_default_str();
    verify->add_option("--rep", sp.rep, "rhoV, rhoVstar, pik or all")->capture_default_str();
    verify->add_option("--preset", sp.preset, "flip, super or all")->capture_default_str();

    std::string algebra, expr;
    auto* eval = app.add_subcommand("eval", "print the normal form of an expression");
    eval->add_option("--algebra", algebra, "preset algebra")->required();
    eval->add_option("--hbar", o.hbar, "the ħ parameter")->capture_default_str();
    eval->add_option("--casimir", o.casimir, "the Casimir value of hyperboloid")->capture_default_str();
    eval->add_option("expr", expr, "expression")->required();

    std::string object, sym_preset = "uqsl2";
    auto* dump = app.add_subcommand("dump", "print a structure matrix as JSON");
    dump->add_option("--object", object, "R, Psi, B, C, Q or Qprime")
        ->required()
        ->check(CLI::IsMember({"R", "Psi", "B", "C", "Q", "Qprime"}));
    dump->add_option("--preset", sym_preset, "uqsl(n), flip(n) or superflip(m,n)")->capture_default_str();

    auto* rep_check = app.add_subcommand("rep-check", "check a module");
    rep_check->add_option("--rep", sp.rep, "rhoV, rhoVstar or pik")->required();
    rep_check->add_option("--k", sp.k, "module index for pik");
    auto* casimir = app.add_subcommand("casimir", "Casimir value on V_k");
    casimir->add_option("--k", sp.k, "module index")->required();
    auto* ch_check = app.add_subcommand("ch-check", "Cayley-Hamilton identity and its idempotents");
    ch_check->add_option("--k", sp.k, "hyperboloid index");
    ch_check->add_option("--hbar", o.hbar, "the ħ parameter")->capture_default_str();
    auto* central_check = app.add_subcommand("central-check", "central elements");
    central_check->add_option("--k", sp.k, "largest power sum")->required();
    central_check->add_option("--hbar", o.hbar, "the ħ parameter")->capture_default_str();
    auto* glie_check = app.add_subcommand("glie-check", "generalized Lie algebra axioms");
    glie_check->add_option("--preset", sp.preset, "flip or super")->required();
    auto* bl_check = app.add_subcommand("braided-lie-check", "braided Lie algebra identities");
    bl_check->add_option("--n", sp.n, "size of the standard symmetry");
    int idx_k = 0, idx_i = 0;
    auto* qindex = app.add_subcommand("q-index", "q-index of a line bundle");
    qindex->add_option("--k", idx_k, "module index")->required();
    qindex->add_option("--i", idx_i, "0 or 1")->required();
    auto* wave = app.add_subcommand("waveops-check", "q-wave operator identities");
    wave->add_option("--algebra", sp.algebra, "r3, r4 or h2")->required();
    wave->add_option("--op", sp.op, "laplace, dirac or maxwell")->required();
    wave->add_option("--dmax", sp.dmax, "degree bound")->capture_default_str();
    wave->add_option("--epsilon", o.epsilon, "the ε of K_q[R^4]")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        SuiteParams p = base_params(o);
        p.n = sp.n;
        p.k = sp.k;
        p.i = sp.i;
        p.dmax = sp.dmax;
        p.algebra = sp.algebra;
        p.op = sp.op;
        p.rep = sp.rep;
        p.preset = sp.preset;

        if (*verify) return emit(o, run_suite(suite, p));
        if (*eval) {
            PresetParams pp;
            pp.q = p.q_scalar();
            pp.hbar = p.hbar;
            pp.casimir = parse_scalar(o.casimir);
            std::cout << AlgebraElement::parse(preset(algebra, pp), expr).str() << '\n';
            return 0;
        }
        if (*dump) {
            HeckeSymmetry h = preset_symmetry(sym_preset, p.q_scalar());
            Matrix m = object == "R"        ? h.R.matrix()
                       : object == "Psi"    ? h.Psi.matrix()
                       : object == "B"      ? h.B
                       : object == "C"      ? h.C
                       : object == "Q"      ? build_Q(h).matrix()
                                            : build_Qprime(h).matrix();
            ordered_json j;
            j["object"] = object;
            j["preset"] = sym_preset;
            j["q"] = p.q_label();
            j["rows"] = m.rows();
            j["cols"] = m.cols();
            j["entries"] = matrix_json(m);
            std::cout << j.dump() << '\n';
            return 0;
        }
        if (*rep_check) return emit(o, rep_reports(p));
        if (*casimir) return emit(o, casimir_reports(p));
        if (*ch_check) return emit(o, ch_reports(p));
        if (*central_check) return emit(o, central_reports(p));
        if (*glie_check) return emit(o, glie_reports(p));
        if (*bl_check) return emit(o, braided_lie_reports(p));
        if (*qindex) {
            IndexValue v = q_index_value(idx_k, idx_i);
            ordered_json j;
            j["k"] = idx_k;
            j["i"] = idx_i;
            j["value"] = p.q ? eval_at(v.value, *p.q).get_str() : v.value.str();
            j["expected"] = p.q ? eval_at(v.expected, *p.q).get_str() : v.expected.str();
            j["match"] = v.match;
            std::cout << j.dump() << '\n';
            return v.match ? 0 : 1;
        }
        if (*wave) return emit(o, waveops_reports(p));
    } catch (const UnknownSuite& e) {
        std::cerr << "UnknownSuite: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "ParseError: " << e.what() << '\n';
        return 2;
    } catch (const ParameterError& e) {
        std::cerr << "ParameterError: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
