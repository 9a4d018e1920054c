#pragma once

#include "lur/genpos.hpp"
#include "lur/intervalpoly.hpp"

#include <cstdint>
#include <optional>

namespace lur {

enum class SolveMode { certified, prob1 };

struct SolveOptions {
    SolveMode mode = SolveMode::certified;
    int precision_log2 = 10;  // initial isolation width 2^-L
    bool shortcut = false;    // Lemma 4.3 monotonicity shortcut (prob1 only)
    bool force_lur = false;   // always run the shear pipeline so every root carries LUR data
    uint64_t seed = 0;        // used by the multivariate combination draws
};

struct IsolatedRoot2 {
    BoxQ box;  // arity 2, disjoint from all other roots' boxes
    int multiplicity = 1;
    UniRoot r1_root;
    std::optional<UniRoot> r2_root;  // absent on the fast/shortcut paths
    Rat shear;                       // s used when r2_root is present
    bool axis = false;               // y is exactly 0 (point interval)
    bool uncertified = false;        // confirmed without certification
};

struct LUR2 {
    std::vector<BoxQ> boxes;
    Rat s;
    UniPoly R1, R2;
    std::vector<std::pair<IntervalQ, IntervalQ>> pairing;  // (alpha, beta) per root
};

struct SolveDiag {
    int s_attempts = 0;
    int refinement_rounds = 0;
    int certification_attempts = 0;
    bool shortcut_used = false;
    bool fastpath = false;  // Corollary 3.3, no shear needed
    int uncertified_confirmations = 0;
    std::vector<std::string> notes;
};

struct SolveResult2 {
    std::vector<IsolatedRoot2> roots;
    std::optional<LUR2> lur;
    bool certified = false;
    SolveDiag diag;
};

/// Isolate the real roots of the zero-dimensional system {f, g} in Z[x, y]
/// (variables 0 and 1), with multiplicities and a linear univariate
/// representation when a shear was used.
SolveResult2 solve_bivariate(const MultiPoly& f, const MultiPoly& g, const SolveOptions& opts = {});

/// Same, with a prescribed shear value: returns nullopt when s is unusable
/// (degree drop, certification failure, or overlapping matching intervals).
std::optional<SolveResult2> solve_bivariate_forced_s(const MultiPoly& f, const MultiPoly& g,
                                                     const Rat& s, const SolveOptions& opts = {});

/// Zero-dimensional systems of three or more bivariate polynomials via the
/// gcd decomposition and shared-shear LUR intersection.
SolveResult2 solve_bivariate_many(const std::vector<MultiPoly>& polys,
                                  const SolveOptions& opts = {});

/// Real roots of gcd(R1, R2): each yields the system root (alpha, 0).
std::vector<UniRoot> axis_roots(const UniPoly& R1, const UniPoly& R2);

/// One matching unit: a fiber root alpha with one candidate interval K.
struct MatchCandidate {
    UniRoot alpha;
    IntervalQ K;
};

/// Algorithm 4.1 step 6: locate the roots of R2 (given by its isolated
/// roots) in each candidate's interval J - s K, discard empty candidates,
/// split candidates holding several roots until the gap condition
/// a2 - b1 > d - c guarantees disjoint sub-boxes.
std::vector<IsolatedRoot2> match_candidates(const std::vector<UniRoot>& r2_roots,
                                            const std::vector<MatchCandidate>& candidates,
                                            const Rat& s);

/// Lemma 4.3: try to confirm single-candidate fibers by bounding-polynomial
/// monotonicity, without the second resultant. Returns the confirmed roots
/// and marks the fibers it consumed; fibers failing the test are left for
/// the full pipeline.
struct ShortcutOutcome {
    std::vector<IsolatedRoot2> confirmed;
    std::vector<size_t> consumed_fibers;
};
ShortcutOutcome monotonic_shortcut(const MultiPoly& f, const MultiPoly& g,
                                   const std::vector<UniRoot>& fibers,
                                   const std::vector<CandidateSet>& fiber_candidates);

/// Tighten a root's box to width <= 2^-target_log2 per coordinate (exact for
/// LUR-carrying roots; fast-path roots refine the fiber and re-isolate).
void refine_root_box(IsolatedRoot2& root, const MultiPoly& f, const MultiPoly& g, int target_log2);

}  // namespace lur
