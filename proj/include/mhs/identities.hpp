#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhs/exact.hpp"
#include "mhs/signature.hpp"

namespace mhslab {

// Binomial-transform identities for multiple harmonic sums. Tags i1..i4 are
// the C(n,k)/C(n+k,k)-weighted family, i5..i7 and c1..c3 the
// C(n,k)*C(n+k,k)-weighted family plus the exotic-sum identity c3.
enum class IdentityId {
    I5,          // sum (-1)^k C(n,k)C(n+k,k) H_k(1) = 2(-1)^n H_n(1)
    I6,          // ... H_k(d), d>=2: composition sum with last entry negated
    I7,          // sum (-1)^k/k^r C(n,k)C(n+k,k) = -sum 2^l H_n(s), s in ({1}^r)
    HHT_EVEN,    // i1: 2 sum (-1)^k/k^{2b} C(n,k)/C(n+k,k) = -S_n({2}^b)
    HHT_ODD,     // i2: 2 sum 1/k^{2b-1} C(n,k)/C(n+k,k) = S_n(1,{2}^{b-1})
    HHT_ODD_H,   // i3: H_k(2a+1)+H_{k-1}(2a+1) weights, = -S_n({2}^a,3,{2}^{b-1})
    HHT_EVEN_H,  // i4: H_k(-2a)+H_{k-1}(-2a) weights, = -S_n({2}^a,1,{2}^{b-1})
    C1,          // composition sum over (2,{1}^{r-1}) with first entry negated
    C2,          // -sum 2^l H_n(s), s in ({1}^{d-2},3,{1}^{r-1})
    C3,          // 2 sum 1/k^{2b-1} C(n,k)/C(n+k,k) ((-1)^k H_{k-1}(2a)-H_{k-1}(-2a)) = R_n(a,b)
};

// CLI tag names: i1..i7, c1..c3.
std::string identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(const std::string& name);

// Parameters used per tag (subset of n, r, d, a, b). Keys follow the
// canonical sweep order n, r, d, a, b.
using Params = std::map<std::string, long>;

// Keys a tag consumes, in canonical order.
std::vector<std::string> identity_params(IdentityId id);

// Throws std::invalid_argument naming the violated constraint.
void validate_params(IdentityId id, const Params& p);

// Evaluation engine: fast = prefix recurrences, oracle = brute enumeration.
enum class Engine { fast, oracle };

Rational identity_lhs(IdentityId id, const Params& p, Engine engine = Engine::fast);
Rational identity_rhs(IdentityId id, const Params& p, Engine engine = Engine::fast);

struct VerificationReport {
    IdentityId identity;
    Params params;
    Rational lhs;
    Rational rhs;
    bool equal;
    double elapsed_ms;
};

VerificationReport verify(IdentityId id, const Params& p, Engine engine = Engine::fast);

// Inclusive range; empty when hi < lo.
struct Range {
    long lo = 0;
    long hi = -1;
    bool contains(long v) const { return lo <= v && v <= hi; }
    long size() const { return hi < lo ? 0 : hi - lo + 1; }
};

using ParamRanges = std::map<std::string, Range>;

struct SweepSummary {
    bool all_passed = true;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;  // points filtered by per-tag constraints
    std::vector<std::size_t> counterexamples;  // indices into reports
};

struct SweepResult {
    std::vector<VerificationReport> reports;
    SweepSummary summary;
};

// Cartesian product over the tag's parameters in canonical order
// (n outermost, then r, d, a, b). Missing ranges default to the tag's
// minimum legal value. Points violating constraints are skipped and counted.
SweepResult sweep(IdentityId id, const ParamRanges& ranges, Engine engine = Engine::fast,
                  unsigned jobs = 1);

// All grid points of a sweep in canonical order (exposed for sampling).
std::vector<Params> sweep_points(IdentityId id, const ParamRanges& ranges);

// Evaluate explicit points (all must satisfy the tag's constraints), possibly
// in parallel; reports come back in input order regardless of jobs.
std::vector<VerificationReport> verify_points(IdentityId id, const std::vector<Params>& points,
                                              Engine engine = Engine::fast, unsigned jobs = 1);

}  // namespace mhslab
