#include "motzeta/worked_examples.hpp"

#include "motzeta/expr_parser.hpp"

namespace motzeta::examples {

namespace {

GrothElement L(std::int64_t k = 1) { return GrothElement::lefschetz(k); }
GrothElement sym(const std::string& s) { return GrothElement::symbol(s); }

void require_positive(std::int64_t v, const char* what) {
    if (v < 1) throw Error(std::string(what) + " must be positive, got " + std::to_string(v));
}

}  // namespace

std::string quadric_symbol(std::int64_t k) { return "Q_" + std::to_string(k); }
std::string double_cover_symbol(std::int64_t d) { return "Qp_" + std::to_string(d); }

GrothElement quadric_class(std::int64_t k) {
    if (k < 0) throw Error("quadric dimension must be nonnegative");
    GrothElement q;
    for (std::int64_t i = 0; i <= k; ++i) q += L(i);
    if (k % 2 == 0) q += L(k / 2);
    return q;
}

std::vector<RewriteRule> quadric_rewrites(std::int64_t d) {
    require_positive(d, "dimension");
    return {{quadric_symbol(d), quadric_class(d)}, {quadric_symbol(d - 1), quadric_class(d - 1)}};
}

SncModel odp_local_model(std::int64_t d) {
    require_positive(d, "dimension");
    SncModel m;
    m.components = {{"E0", 1, 0}, {"E1", 2, d - 1}};
    const GrothElement qd1 = sym(quadric_symbol(d - 1));
    // Only the part over the singular point counts: E0 alone lies off it.
    m.strata = {
        {{"E0"}, GrothElement(), std::nullopt},
        {{"E1"}, sym(double_cover_symbol(d)) - qd1, 2},
        {{"E0", "E1"}, qd1, 1},
    };
    return m;
}

ZetaFunction odp_local_zeta(std::int64_t d) { return compute_zeta(odp_local_model(d)); }

RestrictionMap odp_restriction(std::int64_t d, std::int64_t m) {
    RestrictionMap res;
    if (m % 2 == 0) res.set(double_cover_symbol(d), m, sym(quadric_symbol(d)));
    return res;
}

ZetaFunction odp_zm(std::int64_t d, std::int64_t m) {
    require_positive(d, "dimension");
    require_positive(m, "modulus");
    return simplify(multisect(odp_local_zeta(d), m, odp_restriction(d, m)));
}

ZetaFunction odp_zm_reference(std::int64_t d, std::int64_t m) {
    require_positive(d, "dimension");
    require_positive(m, "modulus");
    const GrothElement qd = sym(quadric_symbol(d)), qd1 = sym(quadric_symbol(d - 1));
    const GrothElement qpd = sym(double_cover_symbol(d));
    const GrothElement lm1 = L() - GrothElement(1L);
    const DenFactor one_minus_t(0, 1);
    if (m % 2 == 0) {
        const std::int64_t e = m * (1 - d) / 2;
        const DenFactor f(e, 1);
        ZetaFunction z = ZetaFunction::term(qd - qd1, 0, {f}) * ZetaFunction::term(L(e), 1, {});
        TPolynomial inner = TPolynomial::monomial(L(e), 2);
        for (std::int64_t j = 1; j <= m / 2 - 1; ++j) inner += TPolynomial::monomial(L((1 - d) * j), 1);
        z += ZetaFunction::term(inner, {one_minus_t, f}) * ZetaFunction::term(lm1 * qd1, 0, {});
        return z;
    }
    const std::int64_t e = m * (1 - d);
    const DenFactor f(e, 2);
    ZetaFunction z = ZetaFunction::term(qpd - qd1, 0, {f}) * ZetaFunction::term(L(e), 2, {});
    TPolynomial inner = TPolynomial::monomial(L(e), 3);
    for (std::int64_t j = 1; j <= (m - 1) / 2; ++j) inner += TPolynomial::monomial(L((1 - d) * j), 1);
    for (std::int64_t j = (m + 1) / 2; j <= m - 1; ++j) inner += TPolynomial::monomial(L((1 - d) * j), 2);
    z += ZetaFunction::term(lm1 * qd1, 0, {one_minus_t, f}) * ZetaFunction::term(inner, {});
    return z;
}

void validate(const OdpConfig& cfg) {
    require_positive(cfg.d, "dimension");
    if (cfg.moduli.empty()) throw Error("at least one modulus is required");
    for (auto m : cfg.moduli) require_positive(m, "modulus");
}

ZetaFunction odp_global_zeta(const OdpConfig& cfg) {
    validate(cfg);
    ZetaFunction z = ZetaFunction::term(cfg.smooth_class, 1, {DenFactor(0, 1)});
    for (auto m : cfg.moduli) z += odp_zm(cfg.d, m);
    return z;
}

EpAssignment odp_generic_ep(std::int64_t d) {
    require_positive(d, "dimension");
    EpAssignment ep;
    EpAssignment none;
    ep.set(quadric_symbol(d), ep_realize(quadric_class(d), none));
    ep.set(quadric_symbol(d - 1), ep_realize(quadric_class(d - 1), none));
    // EP forgets the group action, so the double cover counts as a quadric.
    ep.set(double_cover_symbol(d), ep_realize(quadric_class(d), none));
    ep.set("S", expr::parse_laurent("2 + 5*w^2 + 3*w^6"));
    return ep;
}

// ---- Cynk-van Straten ----

namespace {

SncModel cvs_w_model() {
    SncModel m;
    m.components = {{"E0", 1, 0}, {"E1", 2, 1}};
    m.strata = {
        {{"E0"}, sym("E0o"), 1},
        {{"E1"}, sym("Et1o"), 2},
        {{"E0", "E1"}, sym("E01"), 1},
    };
    return m;
}

}  // namespace

CvsData cvs_models() {
    CvsData data;
    data.w_model = cvs_w_model();
    data.z_w = compute_zeta(data.w_model);
    data.restriction.set("Et1o", 2, sym("F1o"));
    data.restriction.set("E0o", 2, sym("F0o"));
    data.restriction.set("E01", 2, sym("F01"));
    data.z_x = multisect(data.z_w, 2, data.restriction);
    return data;
}

SncModel cvs_x_model() {
    SncModel m;
    m.components = {{"F0", 1, 0}, {"F1", 1, 1}};
    m.strata = {
        {{"F0"}, sym("F0o"), 1},
        {{"F1"}, sym("F1o"), 1},
        {{"F0", "F1"}, sym("F01"), 1},
    };
    return m;
}

ZetaFunction cvs_zw_reference() {
    const GrothElement lm1 = L() - GrothElement(1L);
    return ZetaFunction::term(sym("E0o"), 1, {DenFactor(0, 1)}) +
           ZetaFunction::term(sym("Et1o") * L(-1), 2, {DenFactor(-1, 2)}) +
           ZetaFunction::term(sym("E01") * lm1 * L(-1), 3, {DenFactor(0, 1), DenFactor(-1, 2)});
}

ZetaFunction cvs_zx_reference() {
    const GrothElement lm1 = L() - GrothElement(1L);
    return ZetaFunction::term(sym("F0o"), 1, {DenFactor(0, 1)}) +
           ZetaFunction::term(sym("F1o") * L(-1), 1, {DenFactor(-1, 1)}) +
           ZetaFunction::term(sym("F01") * lm1 * L(-1), 2, {DenFactor(0, 1), DenFactor(-1, 1)});
}

EpAssignment cvs_generic_ep() {
    EpAssignment ep;
    ep.set("F0o", expr::parse_laurent("1 + 3*w^2 + w^4"));
    ep.set("F1o", expr::parse_laurent("1 - 2*w^3 + w^6"));
    ep.set("F01", expr::parse_laurent("2 + 2*w^2"));
    return ep;
}

EpAssignment cvs_w_generic_ep() {
    const EpAssignment x = cvs_generic_ep();
    EpAssignment ep;
    ep.set("E0o", x.at("F0o"));
    ep.set("Et1o", x.at("F1o"));
    ep.set("E01", x.at("F01"));
    return ep;
}

}  // namespace motzeta::examples
