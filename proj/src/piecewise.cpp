#include "rearr/piecewise.hpp"

#include <algorithm>
#include <cassert>

#include "rearr/errors.hpp"

namespace rearr {

Extended domain_end(Domain d) {
    return d == Domain::UnitInterval ? Extended(Rational(1)) : Extended::infinity();
}

namespace {

void validate_in_domain(Domain d, const Rational& lo, const Rational& hi) {
    if (lo.is_negative() || !(lo < hi))
        throw PreconditionError("piece [" + lo.str() + "," + hi.str() + ") is not a valid interval");
    if (d == Domain::UnitInterval && hi > Rational(1))
        throw PreconditionError("piece reaches past the unit interval");
}

std::vector<Piece> canonicalize_pieces(Domain d, std::vector<Piece> pieces) {
    for (const Piece& p : pieces) validate_in_domain(d, p.lo, p.hi);
    std::sort(pieces.begin(), pieces.end(),
              [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
        if (pieces[i + 1].lo < pieces[i].hi)
            throw PreconditionError("pieces overlap at " + pieces[i + 1].lo.str());
    std::vector<Piece> out;
    for (Piece& p : pieces) {
        if (p.value.is_zero()) continue;
        if (!out.empty() && out.back().hi == p.lo && out.back().value == p.value)
            out.back().hi = p.hi;
        else
            out.push_back(std::move(p));
    }
    return out;
}

} // namespace

StepFunction::StepFunction(Domain domain, std::vector<Piece> pieces)
    : domain_(domain), pieces_(canonicalize_pieces(domain, std::move(pieces))) {}

StepFunction StepFunction::indicator(Domain domain, Rational lo, Rational hi, Rational value) {
    std::vector<Piece> p;
    p.push_back(Piece{std::move(lo), std::move(hi), std::move(value)});
    return StepFunction(domain, std::move(p));
}

Rational StepFunction::value_at(const Rational& t) const {
    if (t.is_negative()) throw DomainError("evaluation at negative point");
    if (domain_ == Domain::UnitInterval && t >= Rational(1))
        throw DomainError("evaluation outside (0,1)");
    for (const Piece& p : pieces_) {
        if (t < p.lo) break;
        if (t < p.hi) return p.value;
    }
    return Rational(0);
}

Rational StepFunction::support_end() const {
    return pieces_.empty() ? Rational(0) : pieces_.back().hi;
}

Rational StepFunction::max_abs_value() const {
    Rational m(0);
    for (const Piece& p : pieces_) m = max(m, p.value.abs());
    return m;
}

Rational StepFunction::support_measure() const {
    Rational m(0);
    for (const Piece& p : pieces_) m += p.hi - p.lo;
    return m;
}

Rational StepFunction::total_integral() const {
    Rational s(0);
    for (const Piece& p : pieces_) s += p.value.abs() * (p.hi - p.lo);
    return s;
}

bool StepFunction::is_nonincreasing() const {
    if (pieces_.empty()) return true;
    if (!pieces_.front().lo.is_zero()) return false;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (!pieces_[i].value.is_positive()) return false;
        if (i + 1 < pieces_.size()) {
            if (pieces_[i].hi != pieces_[i + 1].lo) return false;
            if (pieces_[i].value < pieces_[i + 1].value) return false;
        }
    }
    return true;
}

StepFunction StepFunction::abs() const {
    std::vector<Piece> out = pieces_;
    for (Piece& p : out) p.value = p.value.abs();
    return StepFunction(domain_, std::move(out));
}

StepFunction StepFunction::scaled(const Rational& factor) const {
    std::vector<Piece> out = pieces_;
    for (Piece& p : out) p.value *= factor;
    return StepFunction(domain_, std::move(out));
}

StepFunction StepFunction::prefix(const Rational& cut) const {
    std::vector<Piece> out;
    for (const Piece& p : pieces_) {
        if (p.lo >= cut) break;
        out.push_back(Piece{p.lo, min(p.hi, cut), p.value});
    }
    return StepFunction(domain_, std::move(out));
}

StepFunction StepFunction::combine(const StepFunction& f, const StepFunction& g,
                                   const std::function<Rational(const Rational&, const Rational&)>& op) {
    if (f.domain() != g.domain())
        throw PreconditionError("combining functions on different domains");
    std::vector<Rational> cuts;
    for (const Piece& p : f.pieces_) { cuts.push_back(p.lo); cuts.push_back(p.hi); }
    for (const Piece& p : g.pieces_) { cuts.push_back(p.lo); cuts.push_back(p.hi); }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Piece> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Rational v = op(f.value_at(cuts[i]), g.value_at(cuts[i]));
        if (!v.is_zero()) out.push_back(Piece{cuts[i], cuts[i + 1], std::move(v)});
    }
    return StepFunction(f.domain(), std::move(out));
}

bool operator==(const StepFunction& a, const StepFunction& b) {
    if (a.domain_ != b.domain_ || a.pieces_.size() != b.pieces_.size()) return false;
    for (std::size_t i = 0; i < a.pieces_.size(); ++i) {
        const Piece& p = a.pieces_[i];
        const Piece& q = b.pieces_[i];
        if (!(p.lo == q.lo && p.hi == q.hi && p.value == q.value)) return false;
    }
    return true;
}

DecreasingTailFunction::DecreasingTailFunction(std::vector<Piece> head,
                                               std::optional<PowerTail> tail)
    : head_(canonicalize_pieces(Domain::HalfLine, std::move(head))), tail_(std::move(tail)) {
    // Assembled function must be nonincreasing on (0,inf) and integrable.
    if (!head_.empty()) {
        if (!head_.front().lo.is_zero())
            throw PreconditionError("decreasing function must start at 0");
        for (std::size_t i = 0; i < head_.size(); ++i) {
            if (!head_[i].value.is_positive())
                throw PreconditionError("decreasing function has a non-positive piece");
            if (i + 1 < head_.size()) {
                if (head_[i].hi != head_[i + 1].lo)
                    throw PreconditionError("gap in head at " + head_[i].hi.str());
                if (head_[i].value < head_[i + 1].value)
                    throw PreconditionError("head values increase at " + head_[i].hi.str());
            }
        }
    }
    if (tail_) {
        if (tail_->exponent < 2)
            throw PreconditionError("tail exponent below 2 is not integrable");
        if (!tail_->coeff.is_positive() || !tail_->start.is_positive())
            throw PreconditionError("tail needs positive coefficient and start");
        if (head_.empty() || head_.back().hi != tail_->start)
            throw PreconditionError("tail must start where the head ends");
        Rational junction = tail_->coeff * tail_->start.pow(-tail_->exponent);
        if (head_.back().value < junction)
            throw PreconditionError("function increases across the head/tail junction");
    }
}

DecreasingTailFunction DecreasingTailFunction::from_step(const StepFunction& f) {
    if (!f.is_nonincreasing())
        throw PreconditionError("step function is not nonincreasing");
    return DecreasingTailFunction(f.pieces(), std::nullopt);
}

Rational DecreasingTailFunction::value_at(const Rational& t) const {
    if (t.is_negative()) throw DomainError("evaluation at negative point");
    if (tail_ && t >= tail_->start) return tail_->coeff * t.pow(-tail_->exponent);
    for (const Piece& p : head_) {
        if (t < p.lo) break;
        if (t < p.hi) return p.value;
    }
    return Rational(0);
}

Rational DecreasingTailFunction::max_value() const {
    return head_.empty() ? Rational(0) : head_.front().value;
}

Rational DecreasingTailFunction::total_integral() const {
    Rational s(0);
    for (const Piece& p : head_) s += p.value * (p.hi - p.lo);
    if (tail_)
        s += tail_->coeff * tail_->start.pow(1 - tail_->exponent) / Rational(tail_->exponent - 1);
    return s;
}

StepFunction DecreasingTailFunction::head_as_step() const {
    return StepFunction(Domain::HalfLine, head_);
}

bool operator==(const DecreasingTailFunction& a, const DecreasingTailFunction& b) {
    if (a.head_.size() != b.head_.size() || a.tail_.has_value() != b.tail_.has_value())
        return false;
    for (std::size_t i = 0; i < a.head_.size(); ++i) {
        const Piece& p = a.head_[i];
        const Piece& q = b.head_[i];
        if (!(p.lo == q.lo && p.hi == q.hi && p.value == q.value)) return false;
    }
    if (a.tail_)
        return a.tail_->start == b.tail_->start && a.tail_->coeff == b.tail_->coeff &&
               a.tail_->exponent == b.tail_->exponent;
    return true;
}

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> xs, std::vector<Rational> ys,
                                 std::optional<Rational> final_slope)
    : xs_(std::move(xs)), ys_(std::move(ys)), final_slope_(std::move(final_slope)) {
    if (xs_.empty() || xs_.size() != ys_.size())
        throw PreconditionError("piecewise-linear function needs matching breakpoints and values");
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
        if (!(xs_[i] < xs_[i + 1]))
            throw PreconditionError("breakpoints must be strictly increasing");
}

Rational PiecewiseLinear::value_at(const Rational& x) const {
    if (x < xs_.front()) throw DomainError("evaluation left of the first breakpoint");
    if (x >= xs_.back()) {
        if (!final_slope_) return ys_.back();
        return ys_.back() + *final_slope_ * (x - xs_.back());
    }
    std::size_t i = 0;
    while (i + 1 < xs_.size() && xs_[i + 1] <= x) ++i;
    return ys_[i] + slope(i) * (x - xs_[i]);
}

Rational PiecewiseLinear::slope(std::size_t i) const {
    if (i + 1 < xs_.size()) return (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    return final_slope_.value_or(Rational(0));
}

bool PiecewiseLinear::is_nondecreasing() const {
    for (std::size_t i = 0; i < xs_.size(); ++i)
        if (slope(i).is_negative()) return false;
    return true;
}

bool PiecewiseLinear::is_concave() const {
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
        if (slope(i) < slope(i + 1)) return false;
    return true;
}

PiecewiseLinear PiecewiseLinear::canonical() const {
    std::vector<Rational> xs{xs_.front()}, ys{ys_.front()};
    for (std::size_t i = 1; i + 1 < xs_.size(); ++i) {
        Rational before = (ys_[i] - ys [xs.size() - 1]);
        (void)before;
        // keep the knot only if the slope changes across it
        Rational left = (ys_[i] - ys.back()) / (xs_[i] - xs.back());
        Rational right = slope(i);
        if (!(left == right)) {
            xs.push_back(xs_[i]);
            ys.push_back(ys_[i]);
        }
    }
    if (xs_.size() > 1) {
        // last knot stays unless the final ray continues the incoming slope
        Rational left = (ys_.back() - ys.back()) / (xs_.back() - xs.back());
        if (!final_slope_ || !(left == *final_slope_)) {
            xs.push_back(xs_.back());
            ys.push_back(ys_.back());
        }
    }
    std::optional<Rational> fs = final_slope_;
    if (fs && fs->is_zero()) fs = std::nullopt;
    if (xs.size() == 1 && fs) {
        // single knot with a ray: keep as is
    }
    return PiecewiseLinear(std::move(xs), std::move(ys), std::move(fs));
}

bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b) {
    return a.xs_ == b.xs_ && a.ys_ == b.ys_ && a.final_slope_ == b.final_slope_;
}

namespace {

Rational form_value(const std::variant<AffineForm, PowerForm>& form, const Rational& t) {
    if (const auto* af = std::get_if<AffineForm>(&form)) return af->a + af->b * t;
    const auto& pf = std::get<PowerForm>(form);
    return pf.limit - pf.scale * t.pow(-pf.m);
}

} // namespace

PartialIntegral::PartialIntegral(std::vector<IntegralSegment> segments)
    : segments_(std::move(segments)) {
    if (segments_.empty()) throw PreconditionError("partial integral needs segments");
    if (!segments_.front().lo.is_zero())
        throw PreconditionError("partial integral must start at 0");
    if (!std::holds_alternative<AffineForm>(segments_.front().form) ||
        !std::get<AffineForm>(segments_.front().form).a.is_zero())
        throw PreconditionError("partial integral must vanish at 0");
    for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
        if (!(segments_[i].lo < segments_[i + 1].lo))
            throw PreconditionError("segment starts must increase");
        Rational left = form_value(segments_[i].form, segments_[i + 1].lo);
        Rational right = form_value(segments_[i + 1].form, segments_[i + 1].lo);
        if (!(left == right))
            throw PreconditionError("partial integral discontinuous at " + segments_[i + 1].lo.str());
    }
}

Rational PartialIntegral::value_at(const Rational& t) const {
    if (t.is_negative()) throw DomainError("evaluation at negative point");
    std::size_t i = segments_.size() - 1;
    while (i > 0 && t < segments_[i].lo) --i;
    return form_value(segments_[i].form, t);
}

Extended PartialIntegral::limit_at_infinity() const {
    const auto& last = segments_.back().form;
    if (const auto* af = std::get_if<AffineForm>(&last)) {
        if (af->b.is_positive()) return Extended::infinity();
        return Extended(af->a);
    }
    return Extended(std::get<PowerForm>(last).limit);
}

PiecewiseLinear PartialIntegral::affine_part() const {
    std::vector<Rational> xs, ys;
    for (const IntegralSegment& s : segments_) {
        if (std::holds_alternative<PowerForm>(s.form))
            throw PreconditionError("partial integral carries a power cap");
        xs.push_back(s.lo);
        ys.push_back(form_value(s.form, s.lo));
    }
    Rational last_slope = std::get<AffineForm>(segments_.back().form).b;
    return PiecewiseLinear(std::move(xs), std::move(ys),
                           last_slope.is_zero() ? std::nullopt
                                                : std::optional<Rational>(last_slope));
}

bool operator==(const PartialIntegral& a, const PartialIntegral& b) {
    if (a.segments_.size() != b.segments_.size()) return false;
    for (std::size_t i = 0; i < a.segments_.size(); ++i) {
        const IntegralSegment& s = a.segments_[i];
        const IntegralSegment& t = b.segments_[i];
        if (!(s.lo == t.lo)) return false;
        if (s.form.index() != t.form.index()) return false;
        if (const auto* af = std::get_if<AffineForm>(&s.form)) {
            const auto& bf = std::get<AffineForm>(t.form);
            if (!(af->a == bf.a && af->b == bf.b)) return false;
        } else {
            const auto& ap = std::get<PowerForm>(s.form);
            const auto& bp = std::get<PowerForm>(t.form);
            if (!(ap.limit == bp.limit && ap.scale == bp.scale && ap.m == bp.m)) return false;
        }
    }
    return true;
}

Rational integrate(const StepFunction& f, const Extended& t) {
    if (!(t <= domain_end(f.domain())) && !t.is_infinite())
        throw DomainError("integration limit outside domain closure");
    if (f.domain() == Domain::UnitInterval && t.is_infinite())
        throw DomainError("infinite limit on the unit interval");
    Rational s(0);
    for (const Piece& p : f.pieces()) {
        Rational hi = t.is_infinite() ? p.hi : min(p.hi, t.finite());
        if (!(p.lo < hi)) continue;
        s += p.value.abs() * (hi - p.lo);
    }
    return s;
}

Rational integrate(const DecreasingTailFunction& f, const Extended& t) {
    Rational s(0);
    for (const Piece& p : f.head()) {
        Rational hi = t.is_infinite() ? p.hi : min(p.hi, t.finite());
        if (!(p.lo < hi)) continue;
        s += p.value * (hi - p.lo);
    }
    if (f.tail()) {
        const PowerTail& tail = *f.tail();
        Rational km1(tail.exponent - 1);
        if (t.is_infinite()) {
            s += tail.coeff * tail.start.pow(1 - tail.exponent) / km1;
        } else if (t.finite() > tail.start) {
            s += tail.coeff *
                 (tail.start.pow(1 - tail.exponent) - t.finite().pow(1 - tail.exponent)) / km1;
        }
    }
    return s;
}

namespace {

std::vector<IntegralSegment> head_segments(const std::vector<Piece>& pieces) {
    std::vector<IntegralSegment> segs;
    Rational acc(0);
    Rational pos(0);
    for (const Piece& p : pieces) {
        // F(t) = acc + v*(t - lo) = (acc - v*lo) + v*t
        segs.push_back(IntegralSegment{p.lo, AffineForm{acc - p.value * p.lo, p.value}});
        acc += p.value * (p.hi - p.lo);
        pos = p.hi;
    }
    if (segs.empty() || !pos.is_zero()) {
        // leading/trailing flat part
        if (segs.empty())
            segs.push_back(IntegralSegment{Rational(0), AffineForm{Rational(0), Rational(0)}});
        else
            segs.push_back(IntegralSegment{pos, AffineForm{acc, Rational(0)}});
    }
    return segs;
}

} // namespace

PartialIntegral partial_integral(const StepFunction& f) {
    if (!f.is_nonincreasing())
        throw PreconditionError("partial_integral needs a nonincreasing function");
    return PartialIntegral(head_segments(f.pieces()));
}

PartialIntegral partial_integral(const DecreasingTailFunction& f) {
    if (!f.tail()) return PartialIntegral(head_segments(f.head()));
    std::vector<IntegralSegment> segs;
    Rational acc(0);
    for (const Piece& p : f.head()) {
        segs.push_back(IntegralSegment{p.lo, AffineForm{acc - p.value * p.lo, p.value}});
        acc += p.value * (p.hi - p.lo);
    }
    const PowerTail& tail = *f.tail();
    long m = tail.exponent - 1;
    Rational scale = tail.coeff / Rational(m);
    // F(t) = acc + scale*(start^(-m) - t^(-m)) = limit - scale*t^(-m)
    Rational limit = acc + scale * tail.start.pow(-m);
    segs.push_back(IntegralSegment{tail.start, PowerForm{limit, scale, m}});
    return PartialIntegral(std::move(segs));
}

// ---------------------------------------------------------------------------
// Exact sign decisions for the per-cell difference
//
// On a merged cell both functions are a single form, so the difference is
//     d(t) = q + b*t + c1*t^(-m1) + c2*t^(-m2)
// with at most one of {linear term, second power term} present. Every branch
// below reduces the supremum test to rational comparisons.
// ---------------------------------------------------------------------------

namespace {

struct PowerTerm {
    Rational coef;
    long m;
};

struct DiffExpr {
    Rational q;
    Rational b;
    std::vector<PowerTerm> powers; // distinct m, nonzero coef, sorted by m

    Rational eval(const Rational& t) const {
        Rational v = q + b * t;
        for (const PowerTerm& p : powers) v += p.coef * t.pow(-p.m);
        return v;
    }

    void add_form(const std::variant<AffineForm, PowerForm>& form, int sign) {
        Rational s(sign);
        if (const auto* af = std::get_if<AffineForm>(&form)) {
            q += s * af->a;
            b += s * af->b;
            return;
        }
        const auto& pf = std::get<PowerForm>(form);
        q += s * pf.limit;
        Rational coef = -s * pf.scale;
        for (PowerTerm& p : powers) {
            if (p.m == pf.m) {
                p.coef += coef;
                return;
            }
        }
        powers.push_back(PowerTerm{coef, pf.m});
    }

    void normalize() {
        powers.erase(std::remove_if(powers.begin(), powers.end(),
                                    [](const PowerTerm& p) { return p.coef.is_zero(); }),
                     powers.end());
        std::sort(powers.begin(), powers.end(),
                  [](const PowerTerm& a, const PowerTerm& b) { return a.m < b.m; });
    }
};

// d -> q as t -> inf and d(t) > q near infinity; walk out until positive.
Rational doubling_witness(const DiffExpr& d, const Rational& lo) {
    Rational t = max(lo, Rational(1));
    for (int i = 0; i < 20000; ++i) {
        if (d.eval(t).is_positive()) return t;
        t *= Rational(2);
    }
    throw std::logic_error("runaway witness search");
}

// Unimodal d with interior max at t_star, d(t_star) > 0: bisect toward it.
// side(mid) < 0 means t_star is right of mid.
Rational bisection_witness(const DiffExpr& d, Rational lo, Rational hi,
                           const std::function<int(const Rational&)>& side) {
    for (int i = 0; i < 20000; ++i) {
        Rational mid = (lo + hi) / Rational(2);
        if (d.eval(mid).is_positive()) return mid;
        if (side(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    throw std::logic_error("runaway witness bisection");
}

// Supremum check for d over the closed cell [lo, hi] (hi absent = inf).
// Returns a rational point with d > 0, or nullopt when d <= 0 throughout.
std::optional<Rational> positive_point_on_cell(DiffExpr d, const Rational& lo,
                                               const std::optional<Rational>& hi) {
    d.normalize();
    if (d.eval(lo).is_positive()) return lo;
    if (hi && d.eval(*hi).is_positive()) return *hi;

    if (d.powers.empty()) {
        if (!hi && d.b.is_positive()) return doubling_witness(d, lo);
        return std::nullopt; // affine: endpoints/limit settle it
    }

    assert(lo.is_positive()); // power forms never reach 0

    if (d.powers.size() == 1) {
        const Rational& c = d.powers.front().coef;
        long m = d.powers.front().m;
        if (c.is_positive()) {
            // convex; interior max impossible
            if (!hi && d.b.is_positive()) return doubling_witness(d, lo);
            return std::nullopt;
        }
        // c < 0
        if (d.b.is_positive()) {
            if (!hi) return doubling_witness(d, lo);
            return std::nullopt; // increasing
        }
        if (d.b.is_zero()) {
            if (!hi && d.q.is_positive()) return doubling_witness(d, lo);
            return std::nullopt; // increasing toward limit q
        }
        // b < 0: single interior peak at t*^(m+1) = m|c| / (-b)
        Rational R = Rational(m) * (-c) / (-d.b);
        if (R <= lo.pow(m + 1)) return std::nullopt;          // past the peak
        if (hi && R >= hi->pow(m + 1)) return std::nullopt;    // before the peak
        bool peak_positive;
        if (!d.q.is_positive()) {
            peak_positive = false;
        } else {
            Rational W = d.q * Rational(m) / ((-d.b) * Rational(m + 1));
            peak_positive = W.pow(m + 1) > R; // d(t*) > 0  <=>  t* < W
        }
        if (!peak_positive) return std::nullopt;
        Rational upper = hi ? *hi : max(max(lo, Rational(1)), R + Rational(1));
        return bisection_witness(d, lo, upper, [&](const Rational& mid) {
            return mid.pow(m + 1) < R ? -1 : 1;
        });
    }

    // two power terms, no linear part in this algebra
    assert(d.powers.size() == 2 && d.b.is_zero());
    const Rational& c1 = d.powers[0].coef;
    const Rational& c2 = d.powers[1].coef;
    long m1 = d.powers[0].m, m2 = d.powers[1].m;
    if (!hi && d.q.is_positive()) return doubling_witness(d, lo);
    if (c1.is_positive() && c2.is_negative()) {
        // in u = 1/t: max at u*^(m2-m1) = m1*c1 / (-m2*c2)
        Rational R = Rational(m1) * c1 / (Rational(m2) * (-c2));
        Rational u_hi_pow = lo.pow(-(m2 - m1)); // (1/lo)^(m2-m1)
        if (R >= u_hi_pow) return std::nullopt; // max left of cell in t
        if (hi && R <= hi->pow(-(m2 - m1))) return std::nullopt;
        bool peak_positive;
        if (!d.q.is_negative()) {
            peak_positive = true; // q + positive bump
        } else {
            Rational W = (-d.q) * Rational(m2) / (c1 * Rational(m2 - m1));
            // d(t*) <= 0  <=>  u*^m1 <= W  <=>  R^m1 <= W^(m2-m1)
            peak_positive = R.pow(m1) > W.pow(m2 - m1);
        }
        if (!peak_positive) return std::nullopt;
        Rational Rinv = R.reciprocal(); // t*^(m2-m1)
        Rational upper = hi ? *hi : max(max(lo, Rational(1)), Rinv + Rational(1));
        return bisection_witness(d, lo, upper, [&](const Rational& mid) {
            return mid.pow(m2 - m1) < Rinv ? -1 : 1;
        });
    }
    // same sign or (c1<0, c2>0): max at endpoints / infinity, all checked
    return std::nullopt;
}

const std::variant<AffineForm, PowerForm>& active_form(const PartialIntegral& F,
                                                       const Rational& t) {
    const auto& segs = F.segments();
    std::size_t i = segs.size() - 1;
    while (i > 0 && t < segs[i].lo) --i;
    return segs[i].form;
}

} // namespace

std::optional<Rational> find_domination_violation(const PartialIntegral& F,
                                                  const PartialIntegral& H) {
    std::vector<Rational> cuts;
    for (const IntegralSegment& s : F.segments()) cuts.push_back(s.lo);
    for (const IntegralSegment& s : H.segments()) cuts.push_back(s.lo);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        std::optional<Rational> hi;
        if (i + 1 < cuts.size()) hi = cuts[i + 1];
        DiffExpr d;
        d.add_form(active_form(F, cuts[i]), +1);
        d.add_form(active_form(H, cuts[i]), -1);
        if (auto w = positive_point_on_cell(std::move(d), cuts[i], hi)) return w;
    }
    return std::nullopt;
}

bool dominates_everywhere(const PartialIntegral& F, const PartialIntegral& H) {
    return !find_domination_violation(F, H).has_value();
}

} // namespace rearr
