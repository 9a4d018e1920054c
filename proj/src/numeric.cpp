#include "lur/numeric.hpp"

#include <algorithm>
#include <sstream>

namespace lur {

unsigned bitsize(const Int& v) {
    if (v == 0) return 1;
    Int a = abs(v);
    return static_cast<unsigned>(mpz_sizeinbase(a.get_mpz_t(), 2)) + 1;
}

unsigned bitsize(const Rat& q) {
    return std::max(bitsize(Int(q.get_num())), bitsize(Int(q.get_den())));
}

int sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }
int sign(const Int& v) { return mpz_sgn(v.get_mpz_t()); }

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> rat_from_string(const std::string& s) {
    if (s.empty()) return std::nullopt;
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) <= 0) return std::nullopt;
    q.canonicalize();
    return q;
}

IntervalQ::IntervalQ(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw Error(ErrorCode::InvalidArgument, "interval endpoints out of order");
}

IntervalQ iv_add(const IntervalQ& a, const IntervalQ& b) { return IntervalQ(a.lo + b.lo, a.hi + b.hi); }

IntervalQ iv_sub(const IntervalQ& a, const IntervalQ& b) { return IntervalQ(a.lo - b.hi, a.hi - b.lo); }

IntervalQ iv_mul(const IntervalQ& a, const IntervalQ& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return IntervalQ(lo, hi);
}

IntervalQ iv_scale(const IntervalQ& a, const Rat& c) {
    if (sign(c) >= 0) return IntervalQ(a.lo * c, a.hi * c);
    return IntervalQ(a.hi * c, a.lo * c);
}

IntervalQ iv_neg(const IntervalQ& a) { return IntervalQ(-a.hi, -a.lo); }

IntervalQ iv_hull(const IntervalQ& a, const IntervalQ& b) {
    return IntervalQ(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

std::optional<IntervalQ> iv_intersect(const IntervalQ& a, const IntervalQ& b) {
    Rat lo = std::max(a.lo, b.lo);
    Rat hi = std::min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return IntervalQ(lo, hi);
}

std::string to_string(const IntervalQ& iv) {
    return "[" + rat_to_string(iv.lo) + ", " + rat_to_string(iv.hi) + "]";
}

bool BoxQ::intersects(const BoxQ& other) const {
    if (dims.size() != other.dims.size())
        throw Error(ErrorCode::InvalidArgument, "box arity mismatch");
    for (size_t i = 0; i < dims.size(); ++i)
        if (!dims[i].intersects(other.dims[i])) return false;
    return true;
}

std::string to_string(const BoxQ& b) {
    std::string s = "[";
    for (size_t i = 0; i < b.dims.size(); ++i) {
        if (i) s += ", ";
        s += to_string(b.dims[i]);
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// IntervalSet
// ---------------------------------------------------------------------------

ExtInterval ExtInterval::closed(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw Error(ErrorCode::InvalidArgument, "ext interval endpoints out of order");
    ExtInterval iv;
    iv.lo = lo;
    iv.hi = hi;
    return iv;
}

ExtInterval ExtInterval::lower_ray(const Rat& hi, bool open) {
    ExtInterval iv;
    iv.lo_inf = true;
    iv.hi = hi;
    iv.hi_open = open;
    return iv;
}

ExtInterval ExtInterval::upper_ray(const Rat& lo, bool open) {
    ExtInterval iv;
    iv.hi_inf = true;
    iv.lo = lo;
    iv.lo_open = open;
    return iv;
}

ExtInterval ExtInterval::all() {
    ExtInterval iv;
    iv.lo_inf = iv.hi_inf = true;
    return iv;
}

bool ExtInterval::contains(const Rat& v) const {
    if (!lo_inf) {
        if (lo_open ? !(v > lo) : !(v >= lo)) return false;
    }
    if (!hi_inf) {
        if (hi_open ? !(v < hi) : !(v <= hi)) return false;
    }
    return true;
}

bool ExtInterval::operator==(const ExtInterval& o) const {
    if (lo_inf != o.lo_inf || hi_inf != o.hi_inf) return false;
    if (!lo_inf && (lo != o.lo || lo_open != o.lo_open)) return false;
    if (!hi_inf && (hi != o.hi || hi_open != o.hi_open)) return false;
    return true;
}

namespace {

// a strictly below b with a gap in between (union would be disconnected)?
bool strictly_below(const ExtInterval& a, const ExtInterval& b) {
    if (a.hi_inf || b.lo_inf) return false;
    if (a.hi < b.lo) return true;
    if (a.hi == b.lo && a.hi_open && b.lo_open) return true;  // both open at the touch point
    return false;
}

// left endpoint order for sorting
bool lo_less(const ExtInterval& a, const ExtInterval& b) {
    if (a.lo_inf != b.lo_inf) return a.lo_inf;
    if (a.lo_inf) return false;
    if (a.lo != b.lo) return a.lo < b.lo;
    return !a.lo_open && b.lo_open;  // closed endpoint starts earlier
}

}  // namespace

void IntervalSet::insert(const ExtInterval& iv) {
    std::vector<ExtInterval> out;
    ExtInterval cur = iv;
    bool placed = false;
    for (const auto& m : members_) {
        if (strictly_below(m, cur)) {
            out.push_back(m);
        } else if (strictly_below(cur, m)) {
            if (!placed) {
                out.push_back(cur);
                placed = true;
            }
            out.push_back(m);
        } else {
            // overlap or touching: merge into cur
            ExtInterval merged;
            const ExtInterval& first = lo_less(m, cur) ? m : cur;
            merged.lo_inf = m.lo_inf || cur.lo_inf;
            if (!merged.lo_inf) {
                merged.lo = first.lo;
                merged.lo_open = first.lo_open;
                if (m.lo == cur.lo && !m.lo_inf && !cur.lo_inf)
                    merged.lo_open = m.lo_open && cur.lo_open;
            }
            merged.hi_inf = m.hi_inf || cur.hi_inf;
            if (!merged.hi_inf) {
                bool m_higher;
                if (m.hi != cur.hi)
                    m_higher = m.hi > cur.hi;
                else
                    m_higher = !m.hi_open;  // closed endpoint extends further
                const ExtInterval& last = m_higher ? m : cur;
                merged.hi = last.hi;
                merged.hi_open = last.hi_open;
                if (m.hi == cur.hi) merged.hi_open = m.hi_open && cur.hi_open;
            }
            cur = merged;
        }
    }
    if (!placed) out.push_back(cur);
    members_ = std::move(out);
}

bool IntervalSet::contains(const Rat& v) const {
    for (const auto& m : members_)
        if (m.contains(v)) return true;
    return false;
}

IntervalSet intervalset_union(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet out = a;
    for (const auto& m : b.members()) out.insert(m);
    return out;
}

std::string to_string(const IntervalSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& m : s.members()) {
        if (!first) out += ", ";
        first = false;
        out += m.lo_open ? "(" : "[";
        out += m.lo_inf ? "-inf" : rat_to_string(m.lo);
        out += ", ";
        out += m.hi_inf ? "+inf" : rat_to_string(m.hi);
        out += m.hi_open ? ")" : "]";
    }
    return out + "}";
}

}  // namespace lur
