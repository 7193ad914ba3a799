#include "folres/chains.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "folres/errors.hpp"

namespace folres {

std::string ASequence::to_string() const {
    std::string out;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(entries[i]);
    }
    return out;
}

Rational continued_fraction(const std::vector<long>& seq) {
    if (seq.empty()) throw ParseError("empty continued fraction");
    Rational r(seq.back());
    for (size_t i = seq.size() - 1; i-- > 0;) {
        if (r == 0) throw DivisionByZero("vanishing continued-fraction tail");
        r = Rational(seq[i]) - 1 / r;
    }
    if (r == 0) throw DivisionByZero("vanishing continued-fraction tail");
    return 1 / r;
}

std::vector<ASequence> generate_A(int depth) {
    std::vector<ASequence> all;
    std::set<std::vector<long>> seen;
    ASequence base{{1, 1}, {}};
    all.push_back(base);
    seen.insert(base.entries);
    std::vector<ASequence> frontier{base};
    for (int d = 0; d < depth; ++d) {
        std::vector<ASequence> next;
        for (const ASequence& s : frontier) {
            std::vector<ASequence> children;
            // rule 1: a0.a_t...a1 -> (a0+1).1.(a_t+1).a_{t-1}...a1
            ASequence r1 = s;
            r1.entries[0] += 1;
            r1.entries[1] += 1;
            r1.entries.insert(r1.entries.begin() + 1, 1);
            r1.derivation.push_back("rule1");
            children.push_back(std::move(r1));
            // rule 2: insert 1 between a_{j+1} and a_j, incrementing both
            for (size_t i = 1; i + 1 < s.entries.size(); ++i) {
                ASequence r2 = s;
                r2.entries[i] += 1;
                r2.entries[i + 1] += 1;
                r2.entries.insert(r2.entries.begin() + i + 1, 1);
                r2.derivation.push_back("rule2@" + std::to_string(i));
                children.push_back(std::move(r2));
            }
            for (ASequence& c : children)
                if (seen.insert(c.entries).second) {
                    all.push_back(c);
                    next.push_back(std::move(c));
                }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const ASequence& a, const ASequence& b) {
        return a.entries < b.entries;
    });
    return all;
}

bool check_lemma1(const ASequence& seq) {
    return Rational(seq.head()) == continued_fraction(seq.tail());
}

bool check_lemma2(const ASequence& seq) {
    std::vector<long> tail = seq.tail();
    size_t t = tail.size();
    try {
        // (a): [a_l, ..., a_h] > 0 for every contiguous block; tail[i] = a_{t-i}
        for (size_t lo = 0; lo < t; ++lo)
            for (size_t hi = lo; hi < t; ++hi) {
                std::vector<long> sub(tail.begin() + lo, tail.begin() + hi + 1);
                if (continued_fraction(sub) <= 0) return false;
            }
        // (b): the head prefixes grow towards the full value
        Rational full = continued_fraction(tail);
        for (size_t i = 0; i + 2 <= t; ++i) {
            std::vector<long> pre(tail.begin(), tail.begin() + i + 1);
            Rational v = continued_fraction(pre);
            if (!(0 < v && v < full)) return false;
        }
    } catch (const DivisionByZero&) {
        return false;
    }
    return true;
}

namespace {

std::string point_key(const AlgebraicPoint& p) {
    return p.chart() + "|" + p.to_string();
}

// Record sitting at the corner of a and b, if any was taken.
std::optional<size_t> find_corner_record(const ResolutionReport& rep,
                                         const std::string& a, const std::string& b) {
    for (size_t i = 0; i < rep.singularities.size(); ++i) {
        const auto& idx = rep.singularities[i].indices;
        if (idx.count(a) && idx.count(b)) return i;
    }
    // one side dicritical: locate by the corner point itself
    const DivisorComponent* ca = rep.component(a);
    if (!ca) return std::nullopt;
    for (const auto& [nbr, pt] : ca->corners) {
        if (nbr != b) continue;
        for (size_t i = 0; i < rep.singularities.size(); ++i)
            if (point_key(rep.singularities[i].location) == point_key(pt) &&
                (rep.singularities[i].indices.count(a) ||
                 rep.singularities[i].indices.count(b)))
                return i;
    }
    return std::nullopt;
}

std::optional<Rational> rational_index(const SingularityRecord& rec,
                                       const std::string& comp) {
    auto it = rec.indices.find(comp);
    if (it == rec.indices.end() || !it->second.is_rational()) return std::nullopt;
    return it->second.as_rational();
}

// Smallest level whose corner satisfies no minimality clause; MissingIndex
// when the data needed by a clause is absent.
std::optional<size_t> first_violation(const LinearChain& ch) {
    for (size_t l = 1; l <= ch.length(); ++l) {
        const ChainCorner& r = ch.corner[l - 1];
        if (r.cls == SingClass::Regular) continue;
        if (r.cls == SingClass::SaddleNode) {
            if (!r.index_high) throw MissingIndex("saddle-node corner lacks the upper index");
            if (*r.index_high != 0) return l;
            continue;
        }
        if (r.cls == SingClass::NondegenerateResonant) {
            if (!r.index_low) throw MissingIndex("resonant corner lacks the lower index");
            Rational sum = *r.index_low;
            if (l > 1) {
                const ChainCorner& prev = ch.corner[l - 2];
                if (!prev.index_high)
                    throw MissingIndex("resonant corner lacks the inherited index");
                sum += *prev.index_high;
            }
            if (sum != -ch.kbar(l)) return l;
            continue;
        }
        return l;  // no clause covers this class
    }
    return std::nullopt;
}

Justification propagation_kind(const ChainCorner& r) {
    return r.cls == SingClass::NondegenerateResonant
               ? Justification::ResonantFundamentalDomain
               : Justification::CornerPropagation;
}

void append_propagation(const LinearChain& ch, std::vector<VerdictStep>& trail,
                        size_t skip) {
    for (size_t l = 1; l <= ch.length(); ++l) {
        if (l == skip) continue;
        trail.push_back({(long)l, propagation_kind(ch.corner[l - 1]),
                         "extension crosses the corner r_" + std::to_string(l)});
    }
}

LinearChain drop_first(const LinearChain& ch) {
    LinearChain sub = ch;
    sub.comps.erase(sub.comps.begin());
    sub.dicritical.erase(sub.dicritical.begin());
    sub.k.erase(sub.k.begin());
    sub.c.erase(sub.c.begin());
    sub.corner.erase(sub.corner.begin());
    return sub;
}

}  // namespace

std::string to_string(VerdictTag t) {
    switch (t) {
        case VerdictTag::Extends: return "Extends";
        case VerdictTag::Minimal: return "Minimal";
        case VerdictTag::Uncovered: return "Uncovered";
    }
    return "?";
}

std::string to_string(Justification j) {
    switch (j) {
        case Justification::NonzeroIndexPoint: return "NonzeroIndexPoint";
        case Justification::CornerPropagation: return "CornerPropagation";
        case Justification::DicriticalEnd: return "DicriticalEnd";
        case Justification::ResonantFundamentalDomain: return "ResonantFundamentalDomain";
    }
    return "?";
}

std::vector<LinearChain> extract_chains(const ResolutionReport& report) {
    std::map<std::string, long> birth;
    for (const auto& c : report.components) birth[c.id] = c.birth_step;
    std::map<std::string, size_t> chain_of;
    std::vector<LinearChain> chains;
    std::vector<std::vector<std::string>> members;
    for (const BlowupEvent& ev : report.history) {
        if (ev.parents.size() == 1) {
            chain_of[ev.new_component] = chains.size();
            chains.push_back({});
            chains.back().parent = ev.parents[0];
            members.push_back({ev.new_component});
        } else if (ev.parents.size() == 2) {
            const std::string& younger =
                birth[ev.parents[0]] > birth[ev.parents[1]] ? ev.parents[0]
                                                            : ev.parents[1];
            size_t ci = chain_of.at(younger);
            chain_of[ev.new_component] = ci;
            members[ci].push_back(ev.new_component);
        }
    }
    for (size_t ci = 0; ci < chains.size(); ++ci) {
        LinearChain& ch = chains[ci];
        const std::set<std::string> mem(members[ci].begin(), members[ci].end());
        for (const BlowupEvent& ev : report.history)
            if (mem.count(ev.new_component) &&
                std::count(ev.parents.begin(), ev.parents.end(), ch.parent))
                ++ch.n_r;
        for (const std::string& id : mem)
            ch.birth = std::max(ch.birth, birth[id]);
        ch.parent_dicritical = report.component(ch.parent)->dicritical;
        // walk the final corner graph from the parent: P_m first, P_1 last
        std::vector<std::string> path;
        std::string prev, cur = ch.parent;
        while (true) {
            std::string next;
            for (const auto& [nbr, pt] : report.component(cur)->corners)
                if (nbr != prev && mem.count(nbr) &&
                    std::find(path.begin(), path.end(), nbr) == path.end())
                    next = nbr;
            if (next.empty()) break;
            path.push_back(next);
            prev = cur;
            cur = next;
        }
        ch.comps.assign(path.rbegin(), path.rend());
        size_t m = ch.comps.size();
        ch.dicritical.resize(m);
        ch.k.resize(m);
        ch.c.assign(m, Rational(0));
        ch.corner.resize(m);
        for (size_t l = 1; l <= m; ++l) {
            const DivisorComponent* P = report.component(ch.comps[l - 1]);
            ch.dicritical[l - 1] = P->dicritical;
            ch.k[l - 1] = -P->self_intersection;
            const std::string& up = l < m ? ch.comps[l] : ch.parent;
            ChainCorner& r = ch.corner[l - 1];
            r.sing = find_corner_record(report, ch.comps[l - 1], up);
            if (r.sing) {
                const SingularityRecord& rec = report.singularities[*r.sing];
                r.cls = rec.cls;
                r.index_low = rational_index(rec, ch.comps[l - 1]);
                r.index_high = rational_index(rec, up);
            }
        }
        for (size_t l = 1; l <= m; ++l) {
            const DivisorComponent* P = report.component(ch.comps[l - 1]);
            for (size_t si : P->singularities) {
                if ((ch.corner[l - 1].sing && *ch.corner[l - 1].sing == si) ||
                    (l > 1 && ch.corner[l - 2].sing && *ch.corner[l - 2].sing == si))
                    continue;
                auto v = rational_index(report.singularities[si], ch.comps[l - 1]);
                if (v && *v > 0) ch.c[l - 1] += *v;
            }
        }
    }
    std::sort(chains.begin(), chains.end(),
              [](const LinearChain& a, const LinearChain& b) {
                  if (a.birth != b.birth) return a.birth > b.birth;
                  return a.comps < b.comps;
              });
    return chains;
}

std::vector<long> chain_sequence(const LinearChain& chain) {
    std::vector<long> out{chain.n_r};
    out.insert(out.end(), chain.k.rbegin(), chain.k.rend());
    return out;
}

bool is_minimal(const LinearChain& chain) { return !first_violation(chain); }

ChainVerdict chain_verdict(const LinearChain& chain) {
    ChainVerdict v;
    size_t m = chain.length();
    size_t ndic = std::count(chain.dicritical.begin(), chain.dicritical.end(), true);
    if (chain.parent_dicritical && ndic == 0) {
        v.tag = VerdictTag::Extends;
        v.trail.push_back({(long)m, Justification::DicriticalEnd,
                           "the parent component is dicritical and every chain "
                           "component is invariant"});
        append_propagation(chain, v.trail, m);
        return v;
    }
    if (!chain.parent_dicritical && ndic == 1 && chain.dicritical[0]) {
        if (m == 1) {
            v.tag = VerdictTag::Extends;
            v.trail.push_back({1, Justification::DicriticalEnd,
                               "the chain is a single dicritical component"});
            return v;
        }
        const ChainCorner& r1 = chain.corner[0];
        if (!r1.index_high)
            throw MissingIndex("dicritical end corner lacks the index along P_2");
        if (*r1.index_high != 0) {
            v.tag = VerdictTag::Extends;
            v.trail.push_back({1, Justification::DicriticalEnd,
                               "nonzero index at the corner with the dicritical end"});
            append_propagation(chain, v.trail, 1);
            return v;
        }
        LinearChain sub = drop_first(chain);
        auto bad = first_violation(sub);
        if (!bad) {
            v.tag = VerdictTag::Minimal;
            v.witness = "dicritical end with zero corner index and minimal subchain";
            return v;
        }
        v.tag = VerdictTag::Extends;
        v.trail.push_back({(long)(*bad + 1), Justification::NonzeroIndexPoint,
                           "index relation fails at corner r_" +
                               std::to_string(*bad + 1) +
                               "; a point of nonzero index exists off the corners"});
        append_propagation(chain, v.trail, *bad + 1);
        return v;
    }
    if (chain.parent_dicritical || ndic > 0) {
        v.tag = VerdictTag::Uncovered;
        v.witness = "dicritical pattern matches none of the extension lemmas";
        return v;
    }
    auto bad = first_violation(chain);
    if (!bad) {
        v.tag = VerdictTag::Minimal;
        v.witness = "every corner satisfies a minimality clause";
        return v;
    }
    v.tag = VerdictTag::Extends;
    v.trail.push_back({(long)*bad, Justification::NonzeroIndexPoint,
                       "index relation fails at corner r_" + std::to_string(*bad) +
                           "; the index theorem forces a point of nonzero index "
                           "away from the corners"});
    append_propagation(chain, v.trail, *bad);
    return v;
}

ExtensionSchedule extension_schedule(const ResolutionReport& report) {
    std::vector<LinearChain> chains = extract_chains(report);
    std::set<std::string> chained;
    std::set<std::string> chain_parents;
    for (const auto& ch : chains) {
        chained.insert(ch.comps.begin(), ch.comps.end());
        chain_parents.insert(ch.parent);
    }
    ExtensionSchedule plan;
    for (const LinearChain& ch : chains) {
        ChainVerdict v = chain_verdict(ch);
        if (v.tag != VerdictTag::Extends)
            throw ScheduleIncomplete("chain rooted on " + ch.parent + ": " +
                                     to_string(v.tag) + " (" + v.witness + ")");
        ScheduleStep step;
        step.components = ch.comps;
        step.why = v.trail.front().why;
        for (const VerdictStep& s : v.trail) {
            if (!step.detail.empty()) step.detail += "; ";
            step.detail += s.detail;
        }
        const ChainCorner& origin = ch.corner[ch.length() - 1];
        if (origin.index_low)
            step.pre_chain_index = *origin.index_low + Rational(ch.n_r);
        if (origin.index_high)
            step.pre_parent_index = *origin.index_high + Rational(ch.n_r);
        if (step.pre_chain_index && *step.pre_chain_index < 0)
            throw ScheduleIncomplete("negative pre-creation index at the origin on " +
                                     ch.parent);
        plan.steps.push_back(std::move(step));
    }
    std::vector<const DivisorComponent*> roots;
    for (const auto& c : report.components)
        if (!chained.count(c.id)) roots.push_back(&c);
    std::sort(roots.begin(), roots.end(),
              [](const DivisorComponent* a, const DivisorComponent* b) {
                  if (a->birth_step != b->birth_step)
                      return a->birth_step > b->birth_step;
                  return a->id < b->id;
              });
    for (const DivisorComponent* c : roots) {
        ScheduleStep step;
        step.components = {c->id};
        if (c->dicritical) {
            step.why = Justification::DicriticalEnd;
            step.detail = c->id + " is dicritical";
        } else {
            bool nonzero_free_point = false;
            for (size_t si : c->singularities) {
                const SingularityRecord& rec = report.singularities[si];
                bool origin = false;
                for (const auto& [id, val] : rec.indices)
                    if (chained.count(id)) origin = true;
                if (!origin && !rec.indices.at(c->id).is_zero())
                    nonzero_free_point = true;
            }
            if (nonzero_free_point) {
                step.why = Justification::NonzeroIndexPoint;
                step.detail = "a singular point of nonzero index lies on " + c->id +
                              " away from every chain origin";
            } else if (chain_parents.count(c->id)) {
                step.why = Justification::CornerPropagation;
                step.detail = "extension reaches " + c->id +
                              " through its chain origins";
            } else {
                throw ScheduleIncomplete("no extension justification for " + c->id);
            }
        }
        plan.steps.push_back(std::move(step));
    }
    return plan;
}

}  // namespace folres
