#pragma once

#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rearr/rational.hpp"

namespace rearr {

/// Underlying measure space: (0,1) or (0,inf), Lebesgue measure.
enum class Domain { UnitInterval, HalfLine };

/// Upper endpoint of the domain (1 or +inf).
Extended domain_end(Domain d);

/// Constant value `value` on [lo, hi).
struct Piece {
    Rational lo;
    Rational hi;
    Rational value;
};

/// Finitely many constant pieces on half-open intervals, zero elsewhere.
/// Canonical form: sorted, pairwise disjoint, no zero-valued pieces,
/// touching pieces with equal value merged. Immutable after construction.
class StepFunction {
public:
    StepFunction(Domain domain, std::vector<Piece> pieces);

    static StepFunction zero(Domain domain) { return StepFunction(domain, {}); }
    static StepFunction indicator(Domain domain, Rational lo, Rational hi,
                                  Rational value = Rational(1));

    Domain domain() const noexcept { return domain_; }
    const std::vector<Piece>& pieces() const noexcept { return pieces_; }
    bool is_zero() const noexcept { return pieces_.empty(); }

    Rational value_at(const Rational& t) const;
    /// End of the support (0 for the zero function).
    Rational support_end() const;
    Rational max_abs_value() const;
    /// Total measure of the support.
    Rational support_measure() const;
    /// Integral of |f| over the whole domain.
    Rational total_integral() const;

    /// True when the function is nonincreasing on the whole domain, i.e.
    /// support starts at 0, values positive and nonincreasing.
    bool is_nonincreasing() const;

    StepFunction abs() const;
    StepFunction scaled(const Rational& factor) const;
    /// Restriction to [0, cut).
    StepFunction prefix(const Rational& cut) const;

    /// Pointwise combination on the merged partition; `op` must map (0,0) to 0.
    static StepFunction combine(const StepFunction& f, const StepFunction& g,
                                const std::function<Rational(const Rational&, const Rational&)>& op);

    friend bool operator==(const StepFunction& a, const StepFunction& b);

private:
    Domain domain_;
    std::vector<Piece> pieces_;
};

/// Power piece coeff * s^(-exponent) for s >= start; exponent >= 2 keeps the
/// tail integrable and every antiderivative rational.
struct PowerTail {
    Rational start;
    Rational coeff;
    long exponent;
};

/// Globally nonincreasing function on (0,inf): constant head pieces covering
/// [0, end-of-head) plus an optional power tail. The majorant/output class.
class DecreasingTailFunction {
public:
    DecreasingTailFunction(std::vector<Piece> head, std::optional<PowerTail> tail);

    static DecreasingTailFunction from_step(const StepFunction& f);

    const std::vector<Piece>& head() const noexcept { return head_; }
    const std::optional<PowerTail>& tail() const noexcept { return tail_; }

    Rational value_at(const Rational& t) const;
    Rational max_value() const;
    Rational total_integral() const;

    /// Head as a StepFunction on (0,inf); only meaningful in full when the
    /// tail is absent.
    StepFunction head_as_step() const;
    bool has_tail() const noexcept { return tail_.has_value(); }

    friend bool operator==(const DecreasingTailFunction& a, const DecreasingTailFunction& b);

private:
    std::vector<Piece> head_;
    std::optional<PowerTail> tail_;
};

/// Continuous piecewise-affine function: values at increasing breakpoints,
/// affine in between, constant or a fixed-slope ray after the last one.
class PiecewiseLinear {
public:
    PiecewiseLinear(std::vector<Rational> xs, std::vector<Rational> ys,
                    std::optional<Rational> final_slope);

    const std::vector<Rational>& xs() const noexcept { return xs_; }
    const std::vector<Rational>& ys() const noexcept { return ys_; }
    const std::optional<Rational>& final_slope() const noexcept { return final_slope_; }

    Rational value_at(const Rational& x) const;
    /// Slope of the segment [xs[i], xs[i+1]); i == xs.size()-1 addresses the
    /// final ray (0 when constant).
    Rational slope(std::size_t i) const;

    bool is_nondecreasing() const;
    bool is_concave() const;

    /// Merge collinear knots; removes interior breakpoints that carry no kink.
    PiecewiseLinear canonical() const;

    friend bool operator==(const PiecewiseLinear& a, const PiecewiseLinear& b);

private:
    std::vector<Rational> xs_;
    std::vector<Rational> ys_;
    std::optional<Rational> final_slope_;
};

/// F(t) = a + b*t on a segment.
struct AffineForm {
    Rational a;
    Rational b;
};

/// F(t) = limit - scale * t^(-m) on a segment (scale > 0, m >= 1):
/// the exact antiderivative of a power piece.
struct PowerForm {
    Rational limit;
    Rational scale;
    long m;
};

struct IntegralSegment {
    Rational lo;
    std::variant<AffineForm, PowerForm> form;
};

/// Partial integral F(t) = int_0^t f of a nonincreasing integrable function:
/// concave, nondecreasing, F(0) = 0. Affine segments, with at most a final
/// power segment when the source has a power tail.
class PartialIntegral {
public:
    explicit PartialIntegral(std::vector<IntegralSegment> segments);

    const std::vector<IntegralSegment>& segments() const noexcept { return segments_; }

    Rational value_at(const Rational& t) const;
    Extended limit_at_infinity() const;

    /// The affine knots as a PiecewiseLinear, ending where the power cap
    /// starts (or with the final affine slope when there is none).
    PiecewiseLinear affine_part() const;

    friend bool operator==(const PartialIntegral& a, const PartialIntegral& b);

private:
    std::vector<IntegralSegment> segments_;
};

/// Exact integral of |f| over [0, t] (t may be +inf).
Rational integrate(const StepFunction& f, const Extended& t);
Rational integrate(const DecreasingTailFunction& f, const Extended& t);

/// Partial integral of a nonincreasing function; precondition checked.
PartialIntegral partial_integral(const StepFunction& f);
PartialIntegral partial_integral(const DecreasingTailFunction& f);

/// True iff F(t) <= H(t) for all t >= 0. Complete for this segment algebra:
/// on each merged piece the difference is affine, convex, or has a single
/// interior extremum whose sign is decidable in rational arithmetic.
bool dominates_everywhere(const PartialIntegral& F, const PartialIntegral& H);

/// A rational witness t with F(t) > H(t), when one exists.
std::optional<Rational> find_domination_violation(const PartialIntegral& F,
                                                  const PartialIntegral& H);

} // namespace rearr
