#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folres/blowup.hpp"

namespace folres {

// Member of the combinatorial family generated from 1.1 by the two
// insertion rules. entries = a0, a_t, ..., a1 with a0 the head.
struct ASequence {
    std::vector<long> entries;
    std::vector<std::string> derivation;  // rule applications from 1.1

    long head() const { return entries.front(); }
    std::vector<long> tail() const {
        return std::vector<long>(entries.begin() + 1, entries.end());
    }
    bool operator==(const ASequence& o) const { return entries == o.entries; }
    std::string to_string() const;
};

// [a_t, ..., a_1] = 1/(a_t - 1/(a_{t-1} - ... - 1/a_1)).
// Throws DivisionByZero when an intermediate tail vanishes.
Rational continued_fraction(const std::vector<long>& seq);

// All sequences derivable in at most `depth` rule applications.
std::vector<ASequence> generate_A(int depth);

// a0 = [a_t, ..., a_1]
bool check_lemma1(const ASequence& seq);

// (a) every sub-fraction [a_l, ..., a_h] is positive;
// (b) 0 < [a_t, ..., a_{t-i}] < [a_t, ..., a_1] for 0 <= i <= t-2.
bool check_lemma2(const ASequence& seq);

// Corner r_l between P_l and P_{l+1}. index_low is the CS index along P_l,
// index_high the index along P_{l+1}; either may be missing when the
// corresponding side is dicritical or the corner was never formed.
struct ChainCorner {
    std::optional<size_t> sing;  // record index into the report, if any
    SingClass cls = SingClass::Regular;
    std::optional<Rational> index_low;
    std::optional<Rational> index_high;
};

// Ordered components P_m > ... > P_1 hanging off the parent P_{m+1} at the
// origin point r = r_m. comps[l-1] = P_l.
struct LinearChain {
    std::string parent;
    bool parent_dicritical = false;
    std::vector<std::string> comps;
    std::vector<bool> dicritical;   // per comp
    std::vector<long> k;            // k_l = -self_intersection(P_l)
    std::vector<Rational> c;        // positive non-corner index sums
    std::vector<ChainCorner> corner;  // corner[l-1] = r_l
    long n_r = 0;                   // blow-ups performed at the origin
    long birth = 0;                 // latest birth step among members

    size_t length() const { return comps.size(); }
    Rational kbar(size_t l) const { return Rational(k[l - 1]) + c[l - 1]; }
};

std::vector<LinearChain> extract_chains(const ResolutionReport& report);

// The sequence n_r.k_m...k_1 attached to the chain.
std::vector<long> chain_sequence(const LinearChain& chain);

// Every corner is regular, a zero-index saddle-node, or resonant with the
// exact index-sum equation. Throws MissingIndex when a needed corner index
// is absent.
bool is_minimal(const LinearChain& chain);

enum class VerdictTag { Extends, Minimal, Uncovered };
enum class Justification {
    NonzeroIndexPoint,
    CornerPropagation,
    DicriticalEnd,
    ResonantFundamentalDomain,
};
std::string to_string(VerdictTag t);
std::string to_string(Justification j);

struct VerdictStep {
    long level = 0;  // l, counted from the free end
    Justification why;
    std::string detail;
};

struct ChainVerdict {
    VerdictTag tag = VerdictTag::Minimal;
    std::vector<VerdictStep> trail;  // populated when Extends
    std::string witness;             // populated when Minimal or Uncovered
};

ChainVerdict chain_verdict(const LinearChain& chain);

struct ScheduleStep {
    std::vector<std::string> components;
    Justification why;
    std::string detail;
    // chain origins: index along P_m (resp. the parent) at the origin corner
    // plus n_r, undoing the drop rule once per blow-up at the point
    std::optional<Rational> pre_chain_index;
    std::optional<Rational> pre_parent_index;
};

struct ExtensionSchedule {
    std::vector<ScheduleStep> steps;
};

// Ordered extension plan over the whole divisor, outermost chains first and
// the root components last. Throws ScheduleIncomplete when some nondicritical
// component cannot be justified.
ExtensionSchedule extension_schedule(const ResolutionReport& report);

}  // namespace folres
