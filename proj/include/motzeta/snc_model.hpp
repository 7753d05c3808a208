#pragma once

// Combinatorial data of an snc-model: components with numerical data (N, nu)
// and the classes of the strata [E~_J^o]. Components with N = 0 are
// horizontal. A support-restricted zeta function is obtained from the same
// data by giving each stratum the class of its part over the support.

#include "motzeta/common.hpp"
#include "motzeta/groth_ring.hpp"
#include "motzeta/zeta_series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace motzeta {

struct Component {
    std::string name;
    std::int64_t N = 0;
    std::int64_t nu = 0;

    bool is_vertical() const { return N > 0; }
};

struct Stratum {
    std::vector<std::string> J;
    GrothElement cls;
    /// Order of the torsor action on the class, when declared.
    std::optional<int> torsor_order;
};

struct SncModel {
    std::vector<Component> components;
    std::vector<Stratum> strata;
    /// Euler characteristics chi(E_i^o), used by the A'Campo formula.
    std::optional<std::map<std::string, std::int64_t>> chi;

    const Component* find(const std::string& name) const;
    /// gcd of the multiplicities of the vertical members of J (0 if none).
    std::int64_t stratum_multiplicity(const Stratum& s) const;
};

/// Every violated invariant, empty when the model is valid.
std::vector<std::string> validation_errors(const SncModel& model);
/// Throws ValidationError listing every violation.
void validate(const SncModel& model);

/// sum over strata meeting the vertical part of
///   [E~_J^o] (L - 1)^{|J| - 1} prod_{j in J} L^{-nu_j} T^{N_j} / (1 - L^{-nu_j} T^{N_j}).
ZetaFunction compute_zeta(const SncModel& model);

/// prod (u^N - 1)^exponent, normalized: distinct N, no zero exponents.
class FactoredRationalU {
public:
    FactoredRationalU() = default;
    explicit FactoredRationalU(const std::vector<std::pair<std::int64_t, std::int64_t>>& factors);

    const std::map<std::int64_t, std::int64_t>& factors() const { return factors_; }
    FactoredRationalU& operator*=(const FactoredRationalU& o);
    friend bool operator==(const FactoredRationalU&, const FactoredRationalU&) = default;
    std::string to_string() const;

private:
    std::map<std::int64_t, std::int64_t> factors_;
};

/// prod over vertical components of (u^{N_i} - 1)^{-chi_i}.
FactoredRationalU acampo_zeta(const SncModel& model);

/// Rewrites each u^N - 1 as the product of Phi_d(u), d | N: d -> exponent.
std::map<std::int64_t, std::int64_t> cyclotomic_refactor(const FactoredRationalU& z);

/// Phi_d computed by dividing u^d - 1 by Phi_e for every proper divisor e.
IntPoly cyclotomic_polynomial(std::int64_t d);

}  // namespace motzeta
