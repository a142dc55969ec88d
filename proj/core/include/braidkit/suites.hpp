#pragma once

#include "braidkit/bundles.hpp"
#include "braidkit/waveops.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidkit {

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckReport {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::string witness;  // nonempty on failure
    double seconds = 0;
    std::vector<std::pair<std::string, std::string>> params;
};

struct SuiteParams {
    std::optional<mpq_class> q;  // empty: symbolic
    std::size_t n = 0;           // 0: the default sizes of the suite
    int k = 0;                   // 0: the default range of the suite
    int i = -1;                  // -1: both idempotents
    std::size_t dmax = 4;
    QScalar epsilon = QScalar(1);
    QScalar hbar = QScalar(1);
    std::string algebra = "all";  // r3, r4, h2 or all
    std::string op = "all";       // laplace, dirac, maxwell or all
    std::string rep = "all";      // rhoV, rhoVstar, pik or all
    std::string preset = "all";   // flip, super or all
    unsigned jobs = 1;

    // q as a scalar; throws ParameterError for 0 and, when forbid_classical, for ±1
    QScalar q_scalar(bool forbid_classical = false) const;
    std::string q_label() const;
};

// parses "symbolic" or a rational such as 3/2
std::optional<mpq_class> parse_q_mode(const std::string& text);
// the requested bound, lowered to BRAIDKIT_DMAX when that is set
std::size_t capped_degree(std::size_t requested);

std::vector<std::string> suite_names();
// checks run in a fixed order; jobs > 1 runs them on worker threads without changing the order
std::vector<CheckReport> run_suite(const std::string& name, const SuiteParams& p);
bool all_pass(const std::vector<CheckReport>& reports);

// single-purpose entry points behind the CLI commands
std::vector<CheckReport> rep_reports(const SuiteParams& p);
std::vector<CheckReport> casimir_reports(const SuiteParams& p);
std::vector<CheckReport> ch_reports(const SuiteParams& p);
std::vector<CheckReport> central_reports(const SuiteParams& p);
std::vector<CheckReport> glie_reports(const SuiteParams& p);
std::vector<CheckReport> braided_lie_reports(const SuiteParams& p);
std::vector<CheckReport> waveops_reports(const SuiteParams& p);

struct IndexValue {
    QScalar value, expected;
    bool match = false;
};
// Ind_q(π_k, e_i(1)) against (k+2)_q for i = 0 and k_q for i = 1
IndexValue q_index_value(int k, int i);

}  // namespace braidkit
