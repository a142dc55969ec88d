#pragma once

#include "braidkit/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace braidkit {

struct NotSkewInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidBraiding : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Undetermined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BiRank {
    int m = 0;
    int n = 0;
    friend bool operator==(const BiRank&, const BiRank&) = default;
};

// A validated Hecke symmetry R on V ⊗ V with its skew-inverse and the derived B, C.
// Entry R(i*n+j, k*n+l) is the coefficient of x_i ⊗ x_j in R(x_k ⊗ x_l).
struct HeckeSymmetry {
    std::string name;
    std::size_t n = 0;
    QScalar q;
    TensorOperator R;
    TensorOperator Rinv;
    TensorOperator Psi;
    Matrix B;
    Matrix C;
    std::optional<BiRank> birank;  // declared
    std::vector<int> parity;       // empty for even symmetries

    std::vector<std::size_t> dims(std::size_t k) const { return std::vector<std::size_t>(k, n); }
    const QScalar& r(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return R(i * n + j, k * n + l);
    }
    const QScalar& rinv(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return Rinv(i * n + j, k * n + l);
    }
    const QScalar& psi(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
        return Psi(i * n + j, k * n + l);
    }
};

HeckeSymmetry standard_R(std::size_t n, const QScalar& q = QScalar::q());
HeckeSymmetry flip(std::size_t n);
// m even and k odd basis vectors
HeckeSymmetry superflip(std::size_t m, std::size_t k);
// validates R and derives Psi, B, C
HeckeSymmetry make_symmetry(std::string name, std::size_t n, const QScalar& q, const Matrix& r,
                            std::optional<BiRank> birank = std::nullopt, std::vector<int> parity = {});
// parses a JSON document {"n": 2, "q": "q", "R": [["q", "0", ...], ...]}
HeckeSymmetry symmetry_from_json(const std::string& text);
HeckeSymmetry preset_symmetry(const std::string& name, const QScalar& q = QScalar::q());

TensorOperator skew_inverse(const TensorOperator& r);
QScalar r_trace(const HeckeSymmetry& h, const Matrix& x);

struct CheckItem {
    std::string id;
    bool pass = false;
    std::string witness;
};

// all defining identities of a Hecke symmetry
std::vector<CheckItem> validate(const HeckeSymmetry& h);

// basis columns of Sym_q^k or the dual of ⋀_q^k inside V^{⊗k}
Matrix symmetric_tensors(const HeckeSymmetry& h, std::size_t k);
Matrix antisymmetric_tensors(const HeckeSymmetry& h, std::size_t k);
BiRank birank_detect(const HeckeSymmetry& h, std::size_t max_degree = 8);

}  // namespace braidkit
