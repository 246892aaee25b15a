#pragma once

#include <optional>

#include "chipfire/rank.hpp"

namespace chipfire {

// Projection along w onto the hyperplane orthogonal to w.
QVec project(const Vec& w, const QVec& p);
QVec project(const Vec& w, const Vec& p);
mpq_class delta_distance(const Vec& r, const QVec& p, const QVec& q);
std::vector<QVec> crit_points(const ExtremeClassSet& ext, const Vec& w);

struct ReflectionResult {
    bool invariant = false;
    std::optional<QVec> witness;
    // matching[i] = class paired with class i under the reflection.
    std::vector<std::size_t> matching;
};

ReflectionResult reflection_invariant(const ExtremeClassSet& ext, const LatticeHandle& L, const Vec& w);

struct RRReport {
    ExtremeClassSet extremes;
    std::vector<QVec> crit;
    bool uniform = false;
    bool reflection_invariant = false;
    bool rr_property = false;
    std::optional<QVec> witness;
    std::optional<Divisor> canonical;
    std::optional<Divisor> reflection_canonical;
    bool natural_rr = false;
    std::optional<std::int64_t> g;
};

// Lexicographically least v0-reduced representative of the class of D.
Divisor normalize_class(const Game& game, std::size_t v0, const Divisor& D);
Divisor natural_canonical(const Game& game);

RRReport rr_verdict(const Game& game, std::size_t v0, double budget = kDefaultBudget);
bool rr_formula_check(const Game& game, std::size_t v0, const RRReport& report, std::int64_t box);
bool canonical_inequality_check(const Game& game, std::size_t v0, const RRReport& report, std::int64_t box);

struct BridgeResult {
    bool original_rr = false;
    bool scaled_rr = false;
    bool verdicts_agree = false;
    std::optional<bool> canonical_transport;
    bool ok() const { return verdicts_agree && canonical_transport.value_or(true); }
};

BridgeResult scaling_bridge(const Game& game, std::size_t v0, double budget = kDefaultBudget);

}  // namespace chipfire
