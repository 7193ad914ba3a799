#pragma once

#include <optional>
#include <vector>

#include "folres/foliation.hpp"

namespace folres {

struct BlowupResult {
    long nu = 0;
    std::optional<FoliationForm> chart1;  // coordinates (x, t), y = t x
    std::optional<FoliationForm> chart2;  // coordinates (u, y), x = u y
    bool dicritical = false;
    AlgebraicPoint center;
};

struct DivisorComponent {
    std::string id;
    long self_intersection = -1;
    bool dicritical = false;
    long birth_step = 0;  // 1-based blow-up count at creation
    // conjugate copies this record stands for (> 1 when born over an extension)
    int orbit_multiplicity = 1;
    std::vector<size_t> singularities;  // indices into ResolutionReport::singularities
    std::vector<std::pair<std::string, AlgebraicPoint>> corners;
};

struct BlowupEvent {
    long step = 0;
    AlgebraicPoint center;
    std::string new_component;
    std::vector<std::string> parents;  // components the center lies on
    long nu = 0;
    bool dicritical = false;
    int orbit_multiplicity = 1;
    // CS index at the center along each nondicritical parent before the
    // blow-up, and along its strict transform at the new corner after
    std::map<std::string, Scalar> index_before;
    std::map<std::string, Scalar> index_after;
};

enum class ResolutionStatus { Resolved, BudgetExceeded, UnsupportedField };

std::string to_string(ResolutionStatus s);

struct ResolutionReport {
    ResolutionStatus status = ResolutionStatus::Resolved;
    std::optional<FoliationForm> input;
    std::vector<DivisorComponent> components;
    std::vector<SingularityRecord> singularities;
    std::vector<BlowupEvent> history;
    std::string error;

    const DivisorComponent* component(const std::string& id) const;
};

// One blow-up of the germ at the origin.
BlowupResult blow_up(const FoliationForm& F, const std::string& chart_prefix = "");

// Full resolution driver; blows up every reducible singularity and every
// tangency point with a dicritical component until all singular points are
// irreducible and dicritical components are transverse.
ResolutionReport resolve(const FoliationForm& F, long budget = 64);

struct ComponentVerdict {
    std::string id;
    Scalar index_sum;
    long self_intersection = 0;
    bool ok = false;
};

// Sum of the CS indices on every nondicritical component against its
// self-intersection number; exact equality.
std::vector<ComponentVerdict> verify_index_theorem(const ResolutionReport& report);
bool index_theorem_holds(const ResolutionReport& report);

// The drop rule: every recorded corner index equals the pre-blow-up index at
// the center minus one.
bool corner_index_drop_check(const ResolutionReport& report);

}  // namespace folres
