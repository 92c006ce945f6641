#pragma once

#include "slfree/linalg.hpp"
#include "slfree/rep.hpp"

#include <optional>

namespace slfree {

// The simple (k+1)-dimensional sl_2 module on the weight basis e_0..e_k with
// h e_j = (k-2j) e_j, y e_j = e_{j+1}, x e_j = j(k-j+1) e_{j-1}.  Matrices
// act on column coordinate vectors.
struct FiniteModule {
    int k = 0;
    Matrix x{0, 0};
    Matrix y{0, 0};
    Matrix h{0, 0};

    int dim() const { return k + 1; }
};

FiniteModule build_finite_module(int k);

// Highest weights of L(k) (x) L(m) = L(k+m) + L(k+m-2) + ... + L(|k-m|),
// cross-checked internally against weight-multiplicity counting.
std::vector<int> clebsch_gordan_components(int k, int m);

// Element of V(p) (x) L(k): one univariate polynomial per weight-basis
// component.
struct TensorElement {
    std::vector<Polynomial> comps;

    static TensorElement zero(int k);

    int dim() const { return static_cast<int>(comps.size()); }
    bool is_zero() const;
    int max_degree() const;

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement scaled(const Rational& c) const;
    bool operator==(const TensorElement& o) const = default;

    std::vector<std::string> to_strings() const;
};

// The sl_2 action on V(p) (x) L(k): a acts as a(x)1 + 1(x)a.  Also carries
// the U(n) = K[x] action r |-> r(x(x)1 + 1(x)X), which is how polynomials act
// on the tensor product.
class TensorRep {
public:
    TensorRep(Polynomial p, int k);

    const Polynomial& p() const { return p_; }
    const Polynomial& q() const { return q_; }
    int k() const { return finite_.k; }
    const FiniteModule& finite() const { return finite_; }

    TensorElement apply_x(const TensorElement& t) const;
    TensorElement apply_y(const TensorElement& t) const;
    TensorElement apply_h(const TensorElement& t) const;

    // r(x (x) 1 + 1 (x) X) t = sum_s (r^(s)/s!) (x) X^s t
    TensorElement module_action(const Polynomial& r, const TensorElement& t) const;

private:
    TensorElement matrix_apply(const Matrix& m, const TensorElement& t) const;

    Polynomial p_;
    Polynomial q_;
    FiniteModule finite_;
};

class DegenerateSplit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct SplitChecks {
    bool h_phi = false;
    bool y_phi = false;
    bool h_psi = false;
    bool y_psi = false;
    bool directness_identity = false;
    bool spans = false;
    bool intersection_trivial = false;

    bool all() const {
        return h_phi && y_phi && h_psi && y_psi && directness_identity && spans &&
               intersection_trivial;
    }
};

struct SplitResult {
    TensorElement phi_gen;  // ((p - p(0))/(2x), 1)
    TensorElement psi_gen;  // ((p + p(0))/2, x)
    SplitChecks checks;
    int checked_degree = 0;

    nlohmann::json to_json() const;
};

// The explicit splitting V(p) (x) L(1) = V(p-1) + V(p+1).  Throws
// DegenerateSplit when p(0) = 1 (the directness argument divides by 1 - p(0)).
SplitResult split_tensor_L1(const Polynomial& p, int degree = 8);

struct TensorSummand {
    int shift = 0;  // k - 2i
    TensorElement generator;
};

struct DecomposeResult {
    bool ok = false;
    std::vector<TensorSummand> summands;
    int certified_degree = 0;
    std::string error;       // reason when !ok
    int failure_degree = -1; // first degree at which a rank certificate drops, when relevant

    nlohmann::json to_json(const Polynomial& p, int k) const;
};

// Decomposes V(p) (x) L(k) into k+1 U(n)-free summands V(p + k - 2i) by
// solving for generators g with h.g = (p+c) * g and y.g = q_c * g (module
// action), then certifying freeness, directness and exhaustion up to the
// truncation degree (default k + deg p + 6).
DecomposeResult decompose_tensor(const Polynomial& p, int k,
                                 std::optional<int> degree = std::nullopt);

}  // namespace slfree
