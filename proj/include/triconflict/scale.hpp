#pragma once

#include <variant>

#include "triconflict/errors.hpp"
#include "triconflict/rational.hpp"

namespace triconflict {

//! A value produced by an acceptance or rejection evaluation: either a
//! Boolean verdict (ordered F < T) or a degree in the unit interval.
class EvaluationValue {
public:
    static EvaluationValue verdict(bool v) { return EvaluationValue(v); }

    static EvaluationValue degree(Rational d) {
        if (d < Rational(0) || d > Rational(1))
            throw DomainError("degree outside [0,1]: " + to_string(d));
        return EvaluationValue(d);
    }

    bool is_verdict() const { return std::holds_alternative<bool>(v_); }
    bool is_degree() const { return std::holds_alternative<Rational>(v_); }

    bool as_verdict() const {
        if (!is_verdict())
            throw DomainError("evaluation value is not a Boolean verdict");
        return std::get<bool>(v_);
    }

    const Rational &as_degree() const {
        if (!is_degree())
            throw DomainError("evaluation value is not a degree");
        return std::get<Rational>(v_);
    }

    friend bool operator==(const EvaluationValue &a, const EvaluationValue &b) {
        return a.v_ == b.v_;
    }

private:
    explicit EvaluationValue(bool v) : v_(v) {}
    explicit EvaluationValue(Rational d) : v_(std::move(d)) {}
    std::variant<bool, Rational> v_;
};

//! The poset an evaluation maps into, together with its designated values.
//!
//! Two carriers are supported: the two-element Boolean scale with designated
//! set {T}, and the unit interval with designated set (t, 1] for a threshold
//! t in [0,1). Both designated sets are upward closed by construction, and
//! both contain the greatest element of their carrier. Note the interval is
//! half-open: a value exactly equal to the threshold is NOT designated.
class EvaluationScale {
public:
    enum class Kind { boolean, unit_interval };

    static EvaluationScale boolean() { return EvaluationScale(Kind::boolean, 0); }

    static EvaluationScale above(Rational threshold) {
        if (threshold < Rational(0) || threshold >= Rational(1))
            throw DomainError("scale threshold outside [0,1): " +
                              to_string(threshold));
        return EvaluationScale(Kind::unit_interval, std::move(threshold));
    }

    Kind kind() const { return kind_; }

    const Rational &threshold() const {
        if (kind_ != Kind::unit_interval)
            throw DomainError("Boolean scale has no threshold");
        return threshold_;
    }

    bool designated(const EvaluationValue &v) const {
        if (kind_ == Kind::boolean)
            return v.as_verdict();
        return v.as_degree() > threshold_;
    }

private:
    EvaluationScale(Kind k, Rational t) : kind_(k), threshold_(std::move(t)) {}
    Kind kind_;
    Rational threshold_;
};

inline bool is_designated(const EvaluationValue &v, const EvaluationScale &s) {
    return s.designated(v);
}

//! The (alpha, beta) pair of the inclusion-degree model. Acceptance is
//! designated on (alpha, 1], rejection on (beta, 1]. No ordering between the
//! two is required; each must leave its designated interval nonempty.
struct Thresholds {
    Rational alpha;
    Rational beta;

    Thresholds(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha < Rational(0) || alpha >= Rational(1))
            throw DomainError("alpha outside [0,1): " + to_string(alpha));
        if (beta < Rational(0) || beta >= Rational(1))
            throw DomainError("beta outside [0,1): " + to_string(beta));
    }

    EvaluationScale acceptance_scale() const { return EvaluationScale::above(alpha); }
    EvaluationScale rejection_scale() const { return EvaluationScale::above(beta); }

    friend bool operator==(const Thresholds &x, const Thresholds &y) {
        return x.alpha == y.alpha && x.beta == y.beta;
    }
};

} // namespace triconflict
