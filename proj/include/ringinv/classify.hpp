#pragma once

/// Ring-level classification by exhaustive scan: proper *-rings (every element
/// left and right *-cancellable), weak proper *-rings (the idempotent
/// cancellation condition, equivalently at-most-one weak group inverse per
/// element), and the cancellability audit of idempotents. Every "false" is
/// substantiated by a witness that re-verifies on demand.

#include <optional>
#include <string>
#include <vector>

#include "weak_group.hpp"

namespace ringinv {

struct PropertyWitness {
    RingElement element;            // the failing element (or idempotent)
    std::optional<RingElement> x;   // the element exhibiting the failure
    std::string side;               // "left" / "right" for cancellability failures
};

struct RingClassification {
    bool proper = true;
    bool weak_proper = true;
    bool idempotents_left_cancellable = true;
    std::optional<PropertyWitness> proper_witness;
    std::optional<PropertyWitness> weak_proper_witness;
    std::optional<PropertyWitness> idempotent_witness;
    // populated only by the verbose scan
    std::vector<PropertyWitness> all_proper;
    std::vector<PropertyWitness> all_weak_proper;
    std::vector<PropertyWitness> all_idempotent;
};

/// Does (e, x) certify that the ring is NOT weak proper? True when
/// e* e x (1-e) = 0 but e x (1-e) != 0. Usable in infinite rings.
inline bool weak_proper_witness_check(const RingElement& e, const RingElement& x) {
    if (!is_idempotent(e)) throw PreconditionError("witness requires an idempotent");
    detail::require_same_ring(e, x);
    const RingElement one = e.ring->one();
    const RingElement z = e.ring->zero();
    const RingElement w = e * x * (one - e);
    return star(e) * w == z && !(w == z);
}

struct WeakProperScan {
    bool holds = true;
    std::optional<PropertyWitness> witness;
    std::vector<PropertyWitness> all;
};

/// Exhaustive idempotent cancellation condition over a finite ring.
inline WeakProperScan weak_proper_condition(const RingPtr& ring, bool verbose = false) {
    if (!ring->finite()) throw NotEnumerableError("classification needs a finite ring");
    WeakProperScan out;
    const RingElement one = ring->one();
    const RingElement z = ring->zero();
    for (const auto& e : idempotents(ring)) {
        const RingElement se = star(e);
        const RingElement rest = one - e;
        bool stop = false;
        ring->for_each_element([&](const RingElement& x) {
            const RingElement w = e * x * rest;
            if (se * w == z && !(w == z)) {
                out.holds = false;
                if (!out.witness) out.witness = PropertyWitness{e, x, ""};
                if (!verbose) {
                    stop = true;
                    return false;
                }
                out.all.push_back(PropertyWitness{e, x, ""});
                return false; // one witness per idempotent is enough
            }
            return true;
        });
        if (stop) break;
    }
    return out;
}

/// Full classification of a finite ring.
inline RingClassification classify_finite(const RingPtr& ring, bool verbose = false) {
    if (!ring->finite()) throw NotEnumerableError("classification needs a finite ring");
    RingClassification out;

    ring->for_each_element([&](const RingElement& a) {
        auto left = left_star_cancellable(a);
        std::optional<PropertyWitness> w;
        if (!left.cancellable) {
            w = PropertyWitness{a, left.witness, "left"};
        } else {
            auto right = right_star_cancellable(a);
            if (!right.cancellable) w = PropertyWitness{a, right.witness, "right"};
        }
        if (w) {
            out.proper = false;
            if (!out.proper_witness) out.proper_witness = *w;
            if (verbose) out.all_proper.push_back(*w);
            return verbose; // stop at the first witness unless collecting all
        }
        return true;
    });

    auto wp = weak_proper_condition(ring, verbose);
    out.weak_proper = wp.holds;
    out.weak_proper_witness = wp.witness;
    out.all_weak_proper = wp.all;

    for (const auto& e : idempotents(ring)) {
        auto c = left_star_cancellable(e);
        if (!c.cancellable) {
            out.idempotents_left_cancellable = false;
            if (!out.idempotent_witness)
                out.idempotent_witness = PropertyWitness{e, c.witness, "left"};
            if (verbose)
                out.all_idempotent.push_back(PropertyWitness{e, c.witness, "left"});
            else
                break;
        }
    }
    return out;
}

struct IdempotentUniqueScan {
    bool holds = true;
    std::optional<RingElement> witness; // an idempotent with  != 1 weak group inverses
};

/// Each idempotent must have exactly one weak group inverse, counted by
/// exhaustive search. Idempotents have Drazin index 1, so k = 1 throughout.
inline IdempotentUniqueScan idempotent_wg_unique(const RingPtr& ring) {
    if (!ring->finite()) throw NotEnumerableError("needs a finite ring");
    IdempotentUniqueScan out;
    for (const auto& e : idempotents(ring)) {
        std::size_t count = 0;
        ring->for_each_element([&](const RingElement& x) {
            if (mwg_check(e, x, 1, 1)) ++count;
            return count < 2;
        });
        if (count != 1) {
            out.holds = false;
            out.witness = e;
            break;
        }
    }
    return out;
}

struct IdempotentPairScan {
    bool holds = true;
    std::optional<std::pair<RingElement, RingElement>> witness;
};

/// For idempotents e, f with eR = fR (tested as ef = f and fe = e) and
/// e* f = e* e, it must follow that e = f.
inline IdempotentPairScan idempotent_pair_condition(const RingPtr& ring) {
    if (!ring->finite()) throw NotEnumerableError("needs a finite ring");
    IdempotentPairScan out;
    const auto idems = idempotents(ring);
    for (const auto& e : idems) {
        const RingElement se = star(e);
        for (const auto& f : idems) {
            if (e * f == f && f * e == e && se * f == se * e && !(e == f)) {
                out.holds = false;
                out.witness = std::make_pair(e, f);
                return out;
            }
        }
    }
    return out;
}

struct UniquenessCharacterizations {
    bool all_elements_at_most_one; // via family counts element by element
    bool idempotents_unique;       // exactly one per idempotent
    bool idempotent_pairs;         // pair condition
    bool cancellation;             // e* e x (1-e) = 0 forces e x (1-e) = 0
    bool all_equal() const {
        return all_elements_at_most_one == idempotents_unique &&
               idempotents_unique == idempotent_pairs &&
               idempotent_pairs == cancellation;
    }
};

/// The four equivalent uniqueness conditions, each computed independently.
inline UniquenessCharacterizations uniqueness_characterizations(const RingPtr& ring) {
    if (!ring->finite()) throw NotEnumerableError("needs a finite ring");
    UniquenessCharacterizations out{true, true, true, true};
    ring->for_each_element([&](const RingElement& a) {
        SolutionFamily fam = mwg_solve(a, 1);
        if (fam.exists && !fam.unique()) {
            out.all_elements_at_most_one = false;
            return false;
        }
        return true;
    });
    out.idempotents_unique = idempotent_wg_unique(ring).holds;
    out.idempotent_pairs = idempotent_pair_condition(ring).holds;
    out.cancellation = weak_proper_condition(ring).holds;
    return out;
}

} // namespace ringinv
