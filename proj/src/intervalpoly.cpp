#include "lur/intervalpoly.hpp"

#include <algorithm>

namespace lur {

namespace {

enum class Owner { lower_poly, upper_poly };

struct Block {
    IntervalQ cell;
    Owner owner;
    UniPoly factor;  // squarefree factor owning the root (integerized poly)
};

IntervalPoly from_coeff_intervals(std::vector<IntervalQ> cs, MultiPoly src, BoxQ box, int free_var) {
    IntervalPoly ip;
    std::vector<Rat> lo(cs.size()), hi(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) {
        lo[i] = cs[i].lo;
        hi[i] = cs[i].hi;
    }
    ip.coeffs = std::move(cs);
    ip.lower = QPoly(std::move(lo));
    ip.upper = QPoly(std::move(hi));
    ip.source = std::move(src);
    ip.box = std::move(box);
    ip.free_var = free_var;
    return ip;
}

// mirror x -> -x: coefficient i picks up (-1)^i
IntervalPoly mirrored(const IntervalPoly& ip) {
    std::vector<IntervalQ> cs = ip.coeffs;
    for (size_t i = 1; i < cs.size(); i += 2) cs[i] = iv_neg(cs[i]);
    return from_coeff_intervals(std::move(cs), ip.source, ip.box, ip.free_var);
}

// roots of p in [0, inf) as blocks; cells refined to not straddle 0
std::vector<Block> nonneg_blocks(const QPoly& p, Owner owner, const Rat& width) {
    std::vector<Block> out;
    UniPoly pz = p.clear_denominators();
    if (pz.degree() < 1) return out;
    for (auto& r : isolate(pz, width)) {
        auto iv = r.interval;
        // decide the root's side of 0 (0 itself surfaces as a point root)
        while (!iv.is_point() && iv.lo < 0 && iv.hi > 0)
            iv = refine(UniRoot{iv, 1, r.defining_factor}, iv.width() / 2).interval;
        if (iv.lo >= 0) out.push_back({iv, owner, r.defining_factor});
    }
    return out;
}

// strict separation: consecutive blocks must satisfy hi_i < lo_{i+1}
void separate_blocks(std::vector<Block>& blocks) {
    auto by_lo = [](const Block& a, const Block& b) {
        if (a.cell.lo != b.cell.lo) return a.cell.lo < b.cell.lo;
        return a.cell.hi < b.cell.hi;
    };
    int guard = 0;
    bool again = true;
    while (again) {
        if (++guard > 100000)
            throw Error(ErrorCode::Internal, "effective roots: block separation stuck");
        again = false;
        std::sort(blocks.begin(), blocks.end(), by_lo);
        for (size_t i = 0; i + 1 < blocks.size(); ++i) {
            auto& a = blocks[i];
            auto& b = blocks[i + 1];
            if (a.cell.hi < b.cell.lo) continue;
            again = true;
            auto halve = [](Block& blk) {
                if (blk.cell.is_point()) return;
                blk.cell = refine(UniRoot{blk.cell, 1, blk.factor}, blk.cell.width() / 2).interval;
            };
            halve(a);
            halve(b);
            if (a.cell.is_point() && b.cell.is_point() && a.cell.lo == b.cell.lo) {
                // shared root of both bounding polynomials (possible only at 0):
                // keep a single block
                blocks.erase(blocks.begin() + static_cast<long>(i) + 1);
                break;
            }
        }
    }
}

// effective roots of ip on [0, +inf) (paper Algorithm 2.1); bound injected
// from the interval Cauchy bound when the tail stays inside
std::vector<EffectiveRoot> effective_nonneg(const IntervalPoly& ip) {
    const QPoly& L = ip.lower;
    const QPoly& U = ip.upper;
    UniPoly Lz = L.clear_denominators();
    UniPoly Uz = U.clear_denominators();
    if (Lz.is_zero() || Uz.is_zero())
        throw Error(ErrorCode::Internal, "effective roots: zero bounding polynomial");

    auto prod_sign = [&](const Rat& x) { return Lz.sign_at(x) * Uz.sign_at(x); };

    Rat width = make_rat(1, 1024);
    std::vector<Block> blocks = nonneg_blocks(L, Owner::lower_poly, width);
    {
        auto ub = nonneg_blocks(U, Owner::upper_poly, width);
        blocks.insert(blocks.end(), ub.begin(), ub.end());
    }
    separate_blocks(blocks);

    std::vector<EffectiveRoot> out;
    int p0 = prod_sign(Rat(0));

    if (blocks.empty()) {
        if (p0 > 0) return out;
        if (p0 == 0)
            throw Error(ErrorCode::Internal, "effective roots: zero at origin without a block");
        // inside on the whole axis: cap with the interval Cauchy bound
        Rat mx(0);
        for (const auto& c : ip.coeffs) {
            Rat a = abs(c.lo), b = abs(c.hi);
            mx = std::max(mx, std::max(a, b));
        }
        const IntervalQ& lead = ip.coeffs.back();
        Rat lead_min = std::min(abs(lead.lo), abs(lead.hi));
        if (sign(lead_min) == 0)
            throw Error(ErrorCode::Internal, "effective roots: leading interval touches zero");
        EffectiveRoot er;
        er.interval = IntervalQ(Rat(0), Rat(1) + mx / lead_min);
        out.push_back(er);
        return out;
    }

    // step 2: zero handling
    bool prepend_zero = false;
    bool extend_first_to_zero = false;
    if (p0 <= 0 && blocks.front().cell.lo > 0) {
        Rat t = blocks.front().cell.lo / 2;
        if (prod_sign(t) >= 0)
            prepend_zero = true;
        else
            extend_first_to_zero = true;
    }

    // step 3: classify gaps; kept (inside) gaps merge neighbouring blocks
    size_t m = blocks.size();
    std::vector<bool> gap_inside(m, false);
    for (size_t i = 0; i + 1 < m; ++i) {
        Rat c = (blocks[i].cell.hi + blocks[i + 1].cell.lo) / 2;
        gap_inside[i] = prod_sign(c) < 0;
    }
    Rat cm = blocks.back().cell.hi + 1;
    bool tail_inside = prod_sign(cm) < 0;

    Rat tail_bound(0);
    if (tail_inside) {
        Rat mx(0);
        for (const auto& c : ip.coeffs) mx = std::max(mx, std::max(abs(c.lo), abs(c.hi)));
        const IntervalQ& lead = ip.coeffs.back();
        Rat lead_min = std::min(abs(lead.lo), abs(lead.hi));
        if (sign(lead_min) == 0)
            throw Error(ErrorCode::Internal, "effective roots: unbounded tail with zero leading bound");
        tail_bound = std::max(Rat(1) + mx / lead_min, cm);
    }

    if (prepend_zero) {
        EffectiveRoot z;
        z.interval = IntervalQ::point(Rat(0));
        z.monotonous = false;
        out.push_back(z);
    }

    size_t i = 0;
    while (i < m) {
        size_t j = i;
        while (j + 1 < m && gap_inside[j]) ++j;
        EffectiveRoot er;
        Rat lo = blocks[i].cell.lo;
        if (i == 0 && extend_first_to_zero) lo = 0;
        Rat hi = blocks[j].cell.hi;
        bool capped = false;
        if (j == m - 1 && tail_inside) {
            hi = tail_bound;
            capped = true;
        }
        er.interval = IntervalQ(lo, hi);
        // Def 2.2 marking: two anchor roots with owners (upper, lower) or
        // (lower, upper); origin/bound anchors are not roots
        bool left_anchor_root = !(i == 0 && extend_first_to_zero);
        bool right_anchor_root = !capped;
        if (left_anchor_root && right_anchor_root && j == i + 1 && gap_inside[i] &&
            blocks[i].owner != blocks[j].owner) {
            const QPoly& monitored = blocks[i].owner == Owner::upper_poly ? L : U;
            UniPoly dz = monitored.derivative().clear_denominators();
            if (dz.is_zero() || count_roots_in(dz, er.interval) == 0) {
                er.monotonous = true;
                er.orientation = blocks[i].owner == Owner::upper_poly ? +1 : -1;
            }
        }
        out.push_back(er);
        i = j + 1;
    }
    return out;
}

std::vector<EffectiveRoot> merge_sorted(std::vector<EffectiveRoot> v) {
    std::sort(v.begin(), v.end(), [](const EffectiveRoot& a, const EffectiveRoot& b) {
        if (a.interval.lo != b.interval.lo) return a.interval.lo < b.interval.lo;
        return a.interval.hi < b.interval.hi;
    });
    std::vector<EffectiveRoot> out;
    for (auto& er : v) {
        if (!out.empty() && out.back().interval.hi >= er.interval.lo) {
            if (er.interval == out.back().interval) continue;  // duplicate
            EffectiveRoot merged;
            merged.interval = iv_hull(out.back().interval, er.interval);
            merged.monotonous = false;  // merged across the origin
            out.back() = merged;
        } else {
            out.push_back(er);
        }
    }
    return out;
}

}  // namespace

bool IntervalPoly::degenerate() const {
    for (const auto& c : coeffs)
        if (!c.is_point()) return false;
    return true;
}

IntervalPoly build_interval_poly(const MultiPoly& f, const BoxQ& box, int free_var) {
    if (f.degree(free_var) < 1)
        throw Error(ErrorCode::InvalidArgument, "build_interval_poly: constant in the free variable");
    auto cs = eval_interval(f, box, free_var);
    return from_coeff_intervals(std::move(cs), f, box, free_var);
}

std::vector<EffectiveRoot> effective_real_roots(const IntervalPoly& ip) {
    if (ip.degenerate()) {
        // exact fiber polynomial: isolating intervals are the effective roots
        UniPoly fz = ip.lower.clear_denominators();
        std::vector<EffectiveRoot> out;
        if (fz.degree() < 1) return out;
        for (const auto& r : isolate(fz)) {
            EffectiveRoot er;
            er.interval = r.interval;
            er.monotonous = true;
            if (r.interval.is_point())
                er.orientation = 0;
            else
                er.orientation = r.defining_factor.sign_at(r.interval.hi) > 0 ? +1 : -1;
            out.push_back(er);
        }
        return out;
    }
    const IntervalQ& lead = ip.coeffs.back();
    if (lead.contains(Rat(0)))
        throw Error(ErrorCode::InvalidArgument,
                    "effective_real_roots: leading coefficient interval contains zero");

    std::vector<EffectiveRoot> all = effective_nonneg(ip);
    for (auto& er : effective_nonneg(mirrored(ip))) {
        EffectiveRoot r;
        r.interval = IntervalQ(-er.interval.hi, -er.interval.lo);
        r.monotonous = er.monotonous;
        r.orientation = -er.orientation;
        all.push_back(r);
    }
    return merge_sorted(std::move(all));
}

std::pair<bool, int> is_monotonous(const IntervalPoly& ip, const IntervalQ& interval) {
    if (interval.lo < 0 && interval.hi > 0) return {false, 0};
    if (interval.lo < 0) {
        auto [ok, orient] = is_monotonous(mirrored(ip), IntervalQ(-interval.hi, -interval.lo));
        return {ok, -orient};
    }
    UniPoly Lz = ip.lower.clear_denominators();
    UniPoly Uz = ip.upper.clear_denominators();
    if (Lz.degree() < 1 || Uz.degree() < 1) return {false, 0};
    auto ru = roots_in(Uz, interval);
    auto rl = roots_in(Lz, interval);
    if (ru.size() != 1 || rl.size() != 1) return {false, 0};
    // order the two anchor roots
    IntervalQ u = ru[0].interval, l = rl[0].interval;
    int guard = 0;
    while (u.intersects(l)) {
        if (++guard > 100000) throw Error(ErrorCode::Internal, "is_monotonous: separation stuck");
        if (!u.is_point()) u = refine(UniRoot{u, 1, ru[0].defining_factor}, u.width() / 2).interval;
        if (!l.is_point()) l = refine(UniRoot{l, 1, rl[0].defining_factor}, l.width() / 2).interval;
        if (u.is_point() && l.is_point() && u.lo == l.lo) return {false, 0};
    }
    if (u.hi < l.lo) {
        UniPoly dz = ip.lower.derivative().clear_denominators();
        if (dz.is_zero() || count_roots_in(dz, interval) == 0) return {true, +1};
    } else {
        UniPoly dz = ip.upper.derivative().clear_denominators();
        if (dz.is_zero() || count_roots_in(dz, interval) == 0) return {true, -1};
    }
    return {false, 0};
}

// ---------------------------------------------------------------------------
// Candidates
// ---------------------------------------------------------------------------

namespace {

// does h vanish at the fiber root defined by `factor` inside `iv`?
bool vanishes_at_fiber(const MultiPoly& h, int var, const UniPoly& factor, const IntervalQ& iv) {
    UniPoly hu = h.to_unipoly(var);
    if (hu.is_zero()) return true;
    UniPoly g = gcd_uni(factor, hu);
    if (g.degree() == 0) return false;
    return count_roots_in(g, iv) > 0;
}

std::optional<std::vector<EffectiveRoot>> intersect_lists(const std::vector<EffectiveRoot>& a,
                                                          const std::vector<EffectiveRoot>& b) {
    std::vector<EffectiveRoot> out;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto iv = iv_intersect(a[i].interval, b[j].interval);
        if (iv) {
            EffectiveRoot er;
            er.interval = *iv;
            out.push_back(er);
        }
        if (a[i].interval.hi < b[j].interval.hi)
            ++i;
        else
            ++j;
    }
    if (out.empty()) return std::nullopt;
    return out;
}

}  // namespace

CandidateSet candidates_over(const std::vector<MultiPoly>& system, const BoxQ& box, int free_var,
                             const UniPoly* fiber_factor) {
    if (system.empty()) throw Error(ErrorCode::InvalidArgument, "candidates: empty system");
    if (fiber_factor && box.arity() != 1)
        throw Error(ErrorCode::InvalidArgument, "candidates: fiber factor needs a 1-d box");

    CandidateSet cs;
    cs.box = box;
    const int max_rounds = 8;
    for (int round = 0;; ++round) {
        cs.per_poly.clear();
        bool need_refine = false;
        bool any_constraint = false;
        std::optional<std::vector<EffectiveRoot>> acc;
        for (const auto& f : system) {
            if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "candidates: zero polynomial");
            // coefficients in the free variable over the (current) box
            std::vector<IntervalQ> coeffs = eval_interval(f, cs.box, free_var);
            // drop provably-vanishing leading terms; refine when undecided
            while (coeffs.size() > 1) {
                const IntervalQ& top = coeffs.back();
                if (!top.contains(Rat(0))) break;
                if (top.is_point()) {  // exactly zero over a point box
                    coeffs.pop_back();
                    ++cs.dropped_leading_terms;
                    continue;
                }
                auto hs = f.coeffs_in(free_var);
                int m = static_cast<int>(coeffs.size()) - 1;
                if (fiber_factor) {
                    int fiber_var = free_var == 0 ? 1 : 0;
                    if (f.arity() != 2)
                        throw Error(ErrorCode::InvalidArgument, "candidates: fiber factor arity");
                    if (vanishes_at_fiber(hs[m], fiber_var, *fiber_factor, cs.box.dims[0])) {
                        coeffs.pop_back();
                        ++cs.dropped_leading_terms;
                        continue;
                    }
                }
                need_refine = true;
                break;
            }
            if (need_refine) break;

            if (coeffs.size() == 1) {
                // constant in the free variable over this fiber
                if (!coeffs[0].contains(Rat(0))) {
                    cs.intervals.clear();
                    cs.per_poly.clear();
                    return cs;  // provably no root on the fiber
                }
                continue;  // no constraint from this polynomial
            }

            IntervalPoly ip;
            {
                std::vector<Rat> lo(coeffs.size()), hi(coeffs.size());
                for (size_t k = 0; k < coeffs.size(); ++k) {
                    lo[k] = coeffs[k].lo;
                    hi[k] = coeffs[k].hi;
                }
                ip.coeffs = coeffs;
                ip.lower = QPoly(std::move(lo));
                ip.upper = QPoly(std::move(hi));
                ip.source = f;
                ip.box = cs.box;
                ip.free_var = free_var;
            }
            auto ers = effective_real_roots(ip);
            cs.per_poly.push_back(ers);
            any_constraint = true;
            if (ers.empty()) {
                cs.intervals.clear();
                return cs;
            }
            if (!acc) {
                acc = ers;
            } else {
                auto next = intersect_lists(*acc, ers);
                if (!next) {
                    cs.intervals.clear();
                    return cs;
                }
                acc = std::move(next);
            }
        }

        if (!need_refine) {
            if (!any_constraint)
                throw Error(ErrorCode::Internal,
                            "candidates: no polynomial constrains the free variable on this fiber");
            for (const auto& er : *acc) cs.intervals.push_back(er.interval);
            return cs;
        }

        if (round >= max_rounds)
            throw Error(ErrorCode::RefineAndRetry,
                        "candidates: leading coefficient interval keeps straddling zero");
        if (!fiber_factor)
            throw Error(ErrorCode::RefineAndRetry,
                        "candidates: box refinement requires fiber data");
        UniRoot r{cs.box.dims[0], 1, *fiber_factor};
        cs.box.dims[0] = refine(r, cs.box.dims[0].width() / 2).interval;
        ++cs.refinement_rounds;
    }
}

std::vector<BoxQ> candidates(const std::vector<MultiPoly>& system, const BoxQ& box, int free_var,
                             const UniPoly* fiber_factor) {
    CandidateSet cs = candidates_over(system, box, free_var, fiber_factor);
    std::vector<BoxQ> out;
    for (const auto& j : cs.intervals) {
        BoxQ b = cs.box;
        b.dims.push_back(j);
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace lur
