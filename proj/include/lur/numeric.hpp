#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lur {

using Int = mpz_class;
using Rat = mpq_class;

/// Error taxonomy shared by the whole pipeline. `code` is stable and mapped
/// to CLI exit statuses.
enum class ErrorCode {
    ZeroPolynomial,
    VariableAbsent,
    NotZeroDimensional,
    RefinementExhausted,
    CertificationExhausted,
    DegenerateCombination,
    NotZeroDimensionalOrUnlucky,
    DisjointnessViolated,
    RefineAndRetry,
    InvalidArgument,
    ParseError,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Maximal bitsize of numerator and denominator, each counted as
/// ceil(log2(|v|+1)) + 1 (one sign bit); bitsize(0) = 1.
unsigned bitsize(const Int& v);
unsigned bitsize(const Rat& q);

int sign(const Rat& q);
int sign(const Int& v);

/// Serialization used in all JSON output: "p/q", or "p" when q = 1.
std::string rat_to_string(const Rat& q);
std::optional<Rat> rat_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// Closed rational intervals
// ---------------------------------------------------------------------------

struct IntervalQ {
    Rat lo;
    Rat hi;

    IntervalQ() : lo(0), hi(0) {}
    IntervalQ(Rat l, Rat h);
    static IntervalQ point(const Rat& v) { return IntervalQ(v, v); }

    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const IntervalQ& other) const { return lo <= other.lo && other.hi <= hi; }
    bool intersects(const IntervalQ& other) const { return lo <= other.hi && other.lo <= hi; }

    bool operator==(const IntervalQ& o) const { return lo == o.lo && hi == o.hi; }
};

IntervalQ iv_add(const IntervalQ& a, const IntervalQ& b);
IntervalQ iv_sub(const IntervalQ& a, const IntervalQ& b);
IntervalQ iv_mul(const IntervalQ& a, const IntervalQ& b);
IntervalQ iv_scale(const IntervalQ& a, const Rat& c);
IntervalQ iv_neg(const IntervalQ& a);
/// Smallest interval containing both (interval hull, not set union).
IntervalQ iv_hull(const IntervalQ& a, const IntervalQ& b);
std::optional<IntervalQ> iv_intersect(const IntervalQ& a, const IntervalQ& b);

std::string to_string(const IntervalQ& iv);

// ---------------------------------------------------------------------------
// Boxes
// ---------------------------------------------------------------------------

struct BoxQ {
    std::vector<IntervalQ> dims;

    BoxQ() = default;
    explicit BoxQ(std::vector<IntervalQ> d) : dims(std::move(d)) {}
    BoxQ(IntervalQ a, IntervalQ b) { dims = {std::move(a), std::move(b)}; }

    size_t arity() const { return dims.size(); }
    bool intersects(const BoxQ& other) const;
    bool operator==(const BoxQ& o) const { return dims == o.dims; }
};

std::string to_string(const BoxQ& b);

// ---------------------------------------------------------------------------
// Extended interval sets (the non-generic sets of the shear machinery).
// Members may be unbounded and carry open/closed endpoint flags; the list is
// kept sorted and pairwise disjoint, touching members merged when their union
// is connected.
// ---------------------------------------------------------------------------

struct ExtInterval {
    bool lo_inf = false;  // lo = -infinity
    bool hi_inf = false;  // hi = +infinity
    Rat lo;
    Rat hi;
    bool lo_open = false;
    bool hi_open = false;

    static ExtInterval closed(const Rat& lo, const Rat& hi);
    static ExtInterval lower_ray(const Rat& hi, bool open);   // (-inf, hi] or (-inf, hi)
    static ExtInterval upper_ray(const Rat& lo, bool open);   // [lo, +inf) or (lo, +inf)
    static ExtInterval all();

    bool contains(const Rat& v) const;
    bool operator==(const ExtInterval& o) const;
};

class IntervalSet {
  public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<ExtInterval> members) { for (auto& m : members) insert(m); }

    void insert(const ExtInterval& iv);
    bool contains(const Rat& v) const;
    bool empty() const { return members_.empty(); }
    const std::vector<ExtInterval>& members() const { return members_; }

    bool operator==(const IntervalSet& o) const { return members_ == o.members_; }

  private:
    std::vector<ExtInterval> members_;  // sorted, disjoint, normalized
};

IntervalSet intervalset_union(const IntervalSet& a, const IntervalSet& b);

std::string to_string(const IntervalSet& s);

}  // namespace lur
