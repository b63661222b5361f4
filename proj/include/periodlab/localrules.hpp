#pragma once

// SL2(k)-distinction of principal series of GL2(K) at a single place, K/k
// quadratic. K^* and k^* are modeled by (valuation mod N) x (finite unit group).

#include <optional>
#include <string>
#include <vector>

#include "periodlab/abgroup_json.hpp"

namespace periodlab {

enum class PlaceKind { Inert, Split };

std::string_view to_string(PlaceKind k);

struct LocalPlaceModel {
    PlaceKind kind = PlaceKind::Inert;
    std::int64_t valuation_modulus = 2;  // N: characters take values in mu_N on a uniformizer
    std::int64_t residue_size = 0;       // q for the residue-field models, 0 for designed ones

    FinAbGroup K;       // model of K^*
    FinAbGroup k;       // model of k^*
    GroupHom restrict;  // k^* -> K^*
    GroupHom norm;      // K^* -> k^*
    GroupHom sigma;     // on K^*
    Character omega;    // omega_{K/k} on k^*, trivial for split places

    /// Coordinates (valuation, unit) of k^* and (valuation, unit[, valuation, unit]) of K^*.
    std::vector<std::int64_t> K_orders, k_orders;
    GroupElem K_elem(const std::vector<std::int64_t>& coords) const;
    GroupElem k_elem(const std::vector<std::int64_t>& coords) const;
    /// A character of K^* from one fraction per coordinate.
    Character K_character(const std::vector<Fraction>& values) const;
    Character k_character(const std::vector<Fraction>& values) const;
    /// Values of a character of K^* on the coordinate generators.
    std::vector<Fraction> K_values(const Character& chi) const;
};

/// Unramified inert place with residue field F_q: units F_{q^2}^* over F_q^*.
LocalPlaceModel inert_place(std::int64_t q, std::int64_t valuation_modulus);
/// Split place with unit group Z/u on each factor.
LocalPlaceModel split_place(std::int64_t unit_order, std::int64_t valuation_modulus);
/// Checks norm o restrict = 2, restrict o norm = 1 + sigma, sigma^2 = 1, omega kills the norm image.
bool place_is_consistent(const LocalPlaceModel& p);

/// The models used by the equivalence checks: all of K^* order at most max_order.
std::vector<LocalPlaceModel> catalogue_places(std::int64_t max_order);

enum class LocalReason { RatioTrivialOnK, RatioSigmaInvariant, SplitAutomatic, None };

std::string_view to_string(LocalReason r);

struct LocalVerdict {
    bool distinguished = false;
    LocalReason reason = LocalReason::None;
    bool assumed = false;  // set only for the archimedean stub
};

/// Ps(chi1, chi2) is SL2(k)-distinguished iff (chi1/chi2)|_k = 1 or (chi1/chi2)^sigma = chi1/chi2.
LocalVerdict ps_sl2_distinguished(const Character& chi1, const Character& chi2, const LocalPlaceModel& p);

/// The archimedean place is not modeled; always distinguished, flagged as assumed.
LocalVerdict archimedean_stub();

/// The two characters nu of k^* for which Ps(chi, chi) is nu-distinguished: chi|_k and chi|_k omega.
/// Inert places only (PlaceMismatch otherwise).
std::vector<Character> equal_character_distinctions(const Character& chi, const LocalPlaceModel& p);

/// Size of a group of local self-twists; throws NotAGroup unless closed, InvalidOrder unless 1, 2 or 4.
std::int64_t packet_size(const std::vector<Character>& self_twists);

struct OrbitCount {
    std::int64_t orbits = 1;
    std::string note;
};

/// Non-monomial: 1. Monomial: |group|, exactly one orbit automorphic.
OrbitCount orbit_count(std::int64_t self_twist_order, bool monomial);

/// A principal series Ps(a, b) of GL2(k) at one of the two places above a split place.
struct PrincipalSeries {
    Character a, b;
    PrincipalSeries dual() const { return {a.inverse(), b.inverse()}; }
    PrincipalSeries twist(const Character& chi) const { return {a * chi, b * chi}; }
    bool operator==(const PrincipalSeries& o) const;
};

/// Split place: pi_{v2} = pi_{v1}^dual chi1 and pi_{v1} = pi_{v2}^dual chi2.
bool split_place_check(const PrincipalSeries& pi1, const PrincipalSeries& pi2, const Character& chi1,
                       const Character& chi2, const LocalPlaceModel& p);

Json to_json(const LocalVerdict& v);
LocalPlaceModel place_from_json(const Json& j);

}  // namespace periodlab
