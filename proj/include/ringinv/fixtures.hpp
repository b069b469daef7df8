#pragma once

/// Built-in regression fixtures: the concrete rings and elements every test
/// suite and the `examples` CLI command exercise. Each fixture re-derives its
/// expected facts from scratch through the public API and reports pass/fail.

#include <functional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "io.hpp"

namespace ringinv {

// -- shipped rings ----------------------------------------------------------

inline RingPtr m2_gaussian_transpose() {
    RingDescriptor d;
    d.kind = RingKind::matrix;
    d.size = 2;
    d.base = ScalarKind::gaussian_rational;
    d.involution = Involution::transpose;
    return Ring::make(d);
}

inline RingPtr m3_rational_transpose() {
    RingDescriptor d;
    d.kind = RingKind::matrix;
    d.size = 3;
    d.base = ScalarKind::rational;
    d.involution = Involution::transpose;
    return Ring::make(d);
}

inline RingPtr m2_rational_transpose() {
    RingDescriptor d;
    d.kind = RingKind::matrix;
    d.size = 2;
    d.base = ScalarKind::rational;
    d.involution = Involution::transpose;
    return Ring::make(d);
}

inline RingPtr m4_integer_transpose() {
    RingDescriptor d;
    d.kind = RingKind::matrix;
    d.size = 4;
    d.base = ScalarKind::integer;
    d.involution = Involution::transpose;
    return Ring::make(d);
}

inline RingPtr m2_f3_transpose() {
    RingDescriptor d;
    d.kind = RingKind::matrix;
    d.size = 2;
    d.base = ScalarKind::modular;
    d.base_modulus = 3;
    d.involution = Involution::transpose;
    return Ring::make(d);
}

inline RingPtr z4_ring() {
    RingDescriptor d;
    d.kind = RingKind::modular;
    d.modulus = 4;
    d.involution = Involution::identity;
    return Ring::make(d);
}

inline RingPtr klein3_swap() {
    RingDescriptor d;
    d.kind = RingKind::group_ring;
    d.p = 3;
    d.group = "klein4";
    d.involution = Involution::swap_ab;
    return Ring::make(d);
}

inline RingPtr f5_pair_swap() {
    auto factor = std::make_shared<RingDescriptor>();
    factor->kind = RingKind::modular;
    factor->modulus = 5;
    factor->involution = Involution::identity;
    RingDescriptor d;
    d.kind = RingKind::product;
    d.factor = factor;
    d.involution = Involution::swap;
    return Ring::make(d);
}

inline RingPtr qq_pair_swap() {
    auto factor = std::make_shared<RingDescriptor>();
    factor->kind = RingKind::matrix;
    factor->size = 1;
    factor->base = ScalarKind::rational;
    factor->involution = Involution::transpose;
    RingDescriptor d;
    d.kind = RingKind::product;
    d.factor = factor;
    d.involution = Involution::swap;
    return Ring::make(d);
}

// -- shipped elements -------------------------------------------------------

inline RingElement matrix_element(const RingPtr& ring, const std::vector<std::string>& entries) {
    Json arr = Json::array();
    for (const auto& s : entries) arr.push_back(s);
    return element_from_json(ring, arr);
}

/// The rank-one Gaussian idempotent with isotropic column (1, i).
inline RingElement gaussian_idempotent_a(const RingPtr& r) {
    return matrix_element(r, {"1", "0", "i", "0"});
}
inline RingElement gaussian_witness_x1(const RingPtr& r) {
    return matrix_element(r, {"1", "0", "i", "0"});
}
inline RingElement gaussian_witness_x2(const RingPtr& r) {
    return matrix_element(r, {"0", "-i", "0", "1"});
}
inline RingElement gaussian_offender_b(const RingPtr& r) {
    return matrix_element(r, {"0", "1", "0", "0"});
}

/// The 4x4 integer matrix that is 2-weak but not 1-weak group invertible.
inline RingElement integer_a4(const RingPtr& r) {
    return matrix_element(r, {"1", "0", "0", "0",
                              "1", "0", "1", "0",
                              "0", "0", "0", "2",
                              "0", "0", "0", "0"});
}
inline RingElement integer_a4_squared(const RingPtr& r) {
    return matrix_element(r, {"1", "0", "0", "0",
                              "1", "0", "0", "2",
                              "0", "0", "0", "0",
                              "0", "0", "0", "0"});
}
inline RingElement integer_a4_drazin(const RingPtr& r) {
    return matrix_element(r, {"1", "0", "0", "0",
                              "1", "0", "0", "0",
                              "0", "0", "0", "0",
                              "0", "0", "0", "0"});
}

inline RingElement klein_element(const RingPtr& r, long long e, long long a, long long b,
                                 long long c) {
    return r->wrap(KleinElem(r->descriptor().p, {e, a, b, c}));
}

inline RingElement residue_element(const RingPtr& r, long long v) {
    return r->wrap(ModularInt(v, r->descriptor().modulus));
}

inline RingElement pair_element(const RingPtr& r, const RingElement& u, const RingElement& v) {
    return r->wrap(ProductValue{{u, v}});
}

// -- built-in regression fixtures -------------------------------------------

struct BuiltinExample {
    std::string name;
    std::function<bool(std::string& detail)> run;
};

inline std::vector<BuiltinExample> builtin_examples() {
    std::vector<BuiltinExample> out;
    auto fail = [](std::string& detail, const std::string& msg) {
        detail = msg;
        return false;
    };

    out.push_back({"m2-gaussian-two-weak-inverses", [fail](std::string& detail) {
        auto r = m2_gaussian_transpose();
        auto a = gaussian_idempotent_a(r);
        auto fam = mwg_solve(a, 1);
        if (!fam.exists) return fail(detail, "family is empty");
        if (fam.unique()) return fail(detail, "family is unexpectedly unique");
        if (fam.dimension() != 1)
            return fail(detail, "perturbation dimension is " + std::to_string(fam.dimension()));
        auto x1 = gaussian_witness_x1(r), x2 = gaussian_witness_x2(r);
        if (!mwg_check(a, x1, 1, fam.index) || !mwg_check(a, x2, 1, fam.index))
            return fail(detail, "known witnesses fail the definition");
        if (!family_contains(fam, x1) || !family_contains(fam, x2))
            return fail(detail, "known witnesses are outside the family");
        return true;
    }});

    out.push_back({"m4-integer-drazin", [fail](std::string& detail) {
        auto r = m4_integer_transpose();
        auto a = integer_a4(r);
        if (!(pow(a, 2) == integer_a4_squared(r))) return fail(detail, "square mismatch");
        auto dz = drazin_matrix(a);
        if (!dz.exists || dz.index != 3)
            return fail(detail, "index is " + std::to_string(dz.index) + ", want 3");
        if (!(*dz.inverse == integer_a4_drazin(r))) return fail(detail, "inverse mismatch");
        auto dz2 = drazin_matrix(pow(a, 2));
        if (!dz2.exists || dz2.index != 2)
            return fail(detail, "square index is " + std::to_string(dz2.index) + ", want 2");
        if (!(*dz2.inverse == integer_a4_drazin(r)))
            return fail(detail, "square inverse mismatch");
        return true;
    }});

    out.push_back({"m4-integer-two-weak-not-one-weak", [fail](std::string& detail) {
        auto r = m4_integer_transpose();
        auto a = integer_a4(r);
        if (mwg_solve(a, 1).exists) return fail(detail, "unexpected order-1 witness");
        auto fam2 = mwg_solve(a, 2);
        if (!fam2.exists) return fail(detail, "no order-2 witness");
        if (!mwg_check(a, *fam2.canonical, 2, fam2.index))
            return fail(detail, "order-2 canonical member fails the definition");
        return true;
    }});

    out.push_back({"z4-classification", [fail](std::string& detail) {
        auto r = z4_ring();
        auto c = classify_finite(r);
        if (c.proper) return fail(detail, "ring misclassified as proper");
        if (!c.weak_proper) return fail(detail, "ring misclassified as not weak proper");
        if (!c.idempotents_left_cancellable)
            return fail(detail, "idempotents misclassified as non-cancellable");
        if (!c.proper_witness || !(c.proper_witness->element == residue_element(r, 2)))
            return fail(detail, "witness should be the residue 2");
        return true;
    }});

    out.push_back({"klein-z3-classification", [fail](std::string& detail) {
        auto r = klein3_swap();
        auto c = classify_finite(r);
        if (c.proper || !c.weak_proper) return fail(detail, "classification flags wrong");
        auto w = klein_element(r, 2, 1, 0, 0);   // 2e+a
        auto x = klein_element(r, 2, 0, 2, 0);   // 2e+2b
        if (!is_idempotent(w)) return fail(detail, "2e+a should be idempotent");
        if (!(is_zero(star(w) * w * x) && !is_zero(w * x)))
            return fail(detail, "2e+2b does not witness non-cancellability of 2e+a");
        if (left_star_cancellable(w).cancellable)
            return fail(detail, "2e+a should not be left *-cancellable");
        return true;
    }});

    out.push_back({"f5-pair-swap-idempotent", [fail](std::string& detail) {
        auto r = f5_pair_swap();
        auto c = classify_finite(r);
        if (!c.weak_proper) return fail(detail, "product ring must be weak proper");
        if (c.idempotents_left_cancellable)
            return fail(detail, "idempotent cancellability should fail");
        auto e = pair_element(r, residue_element(r->factor(), 1), residue_element(r->factor(), 0));
        if (!is_idempotent(e) || !is_zero(star(e) * e) || is_zero(e))
            return fail(detail, "(1,0) should be a non-cancellable idempotent");
        if (left_star_cancellable(e).cancellable)
            return fail(detail, "(1,0) should not be left *-cancellable");
        return true;
    }});

    out.push_back({"m2-gaussian-weak-proper-witness", [fail](std::string& detail) {
        auto r = m2_gaussian_transpose();
        auto a = gaussian_idempotent_a(r);
        auto b = gaussian_offender_b(r);
        if (!weak_proper_witness_check(a, b))
            return fail(detail, "(A,B) should certify non-weak-properness");
        return true;
    }});

    return out;
}

} // namespace ringinv
