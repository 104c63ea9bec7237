#pragma once

// Exact evaluators for lower bounds on dim D^lambda.
//
// Everything here is exact: arbitrary-precision integers and reduced
// rationals. The bound 2*3^((t-2)/3) is irrational in general and is compared
// by cubing, d >= 2*3^((t-2)/3)  <=>  d^3 >= 8*3^(t-2).

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "crystal_depth.hpp"
#include "mullineux.hpp"
#include "partition.hpp"

namespace symmod {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer pow_int(Integer base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

inline Integer factorial(int m) {
    Integer out = 1;
    for (int i = 2; i <= m; ++i)
        out *= i;
    return out;
}

/// m!! for m >= -1; the empty product is 1.
inline Integer double_factorial(int m) {
    Integer out = 1;
    for (int i = m; i > 1; i -= 2)
        out *= i;
    return out;
}

/// "num/den" with the denominator always present.
inline std::string rational_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

/// Shortest human form: "81", "35/8".
inline std::string rational_display(const Rational& r) { return r.str(); }

/// Either an exact rational or the number 2*3^((t-2)/3) for an integer t.
class ExactBound {
public:
    enum class Kind { rational, two_times_three_pow };

    static ExactBound rational(Rational value) { return ExactBound(Kind::rational, std::move(value), 0); }
    static ExactBound two_times_three_pow(int t) { return ExactBound(Kind::two_times_three_pow, 0, t); }

    Kind kind() const noexcept { return kind_; }
    const Rational& value() const noexcept { return value_; }
    int t() const noexcept { return t_; }

    /// A bound <= 0 carries no information.
    bool vacuous() const { return kind_ == Kind::rational && value_ <= 0; }

    /// d >= bound, decided exactly.
    bool satisfied_by(const Integer& d) const { return compare(rational(Rational(d)), *this) >= 0; }

    /// Sign of (lhs - rhs).
    friend int compare(const ExactBound& lhs, const ExactBound& rhs) {
        if (lhs.kind_ == Kind::rational && rhs.kind_ == Kind::rational)
            return lhs.value_ < rhs.value_ ? -1 : (lhs.value_ > rhs.value_ ? 1 : 0);
        if (lhs.kind_ == Kind::two_times_three_pow && rhs.kind_ == Kind::two_times_three_pow)
            return lhs.t_ < rhs.t_ ? -1 : (lhs.t_ > rhs.t_ ? 1 : 0);
        if (lhs.kind_ == Kind::two_times_three_pow)
            return -compare(rhs, lhs);
        // rational r against 2*3^((t-2)/3) > 0
        const Rational& r = lhs.value_;
        if (r <= 0)
            return -1;
        Rational cube = r * r * r;
        int e = rhs.t_ - 2;
        Rational target = 8;
        if (e >= 0)
            target *= Rational(pow_int(3, static_cast<unsigned>(e)));
        else
            target /= Rational(pow_int(3, static_cast<unsigned>(-e)));
        return cube < target ? -1 : (cube > target ? 1 : 0);
    }

    std::string to_string() const {
        if (kind_ == Kind::rational)
            return rational_display(value_);
        return "2*3^((" + std::to_string(t_) + "-2)/3)";
    }

    /// Rationals as "num/den" strings, the 2*3^((t-2)/3) form as {"t": t}.
    nlohmann::ordered_json to_json() const {
        if (kind_ == Kind::rational)
            return rational_string(value_);
        return nlohmann::ordered_json{{"t", t_}};
    }

private:
    ExactBound(Kind kind, Rational value, int t) : kind_(kind), value_(std::move(value)), t_(t) {}

    Kind kind_;
    Rational value_;
    int t_;
};

/// C^p_m(n) = (1/m!) prod_{i=0}^{m-1} (n - (delta_p + i) p).
inline Rational C(int m, PrimeChar p, long long n) {
    if (m < 0)
        throw error(errc::negative_m, "m = " + std::to_string(m));
    Integer product = 1;
    for (int i = 0; i < m; ++i)
        product *= Integer(n) - Integer(p.delta() + i) * p.value();
    return Rational(product, factorial(m));
}

/// James' bounds for dim D^{(n-m, mu)}, 1 <= m <= 4.
inline Rational james_bound(int m, long long n) {
    Integer x = n;
    switch (m) {
    case 1: return Rational(x - 2);
    case 2: return Rational(x * x - 5 * x + 2, 2);
    case 3: return Rational(x * x * x - 9 * x * x + 14 * x, 6);
    case 4: return Rational(x * x * x * x - 14 * x * x * x + 47 * x * x - 34 * x, 24);
    default: throw error(errc::m_out_of_range, "James bound needs 1 <= m <= 4, got " + std::to_string(m));
    }
}

/// Outcome of one bound evaluator on one partition.
struct BoundEvaluation {
    bool applicable = false;
    std::optional<ExactBound> value;
    /// Failed precondition when not applicable, otherwise free-form remarks.
    std::string note;

    static BoundEvaluation refused(std::string why) { return {false, std::nullopt, std::move(why)}; }
    static BoundEvaluation of(ExactBound b, std::string note = {}) { return {true, std::move(b), std::move(note)}; }
};

inline BoundEvaluation theorem_A_evaluation(const Partition& lambda, PrimeChar p) {
    require_regular(lambda, p);
    int n = lambda.size();
    int m = n - lambda.first();
    if (m < 4)
        return BoundEvaluation::refused("m = n - lambda_1 = " + std::to_string(m) + " < 4");
    long long threshold = static_cast<long long>(p.value()) * (p.delta() + m - 2);
    if (n < threshold)
        return BoundEvaluation::refused("n = " + std::to_string(n) + " < p(delta_p + m - 2) = " + std::to_string(threshold));
    auto value = C(m, p, n);
    return BoundEvaluation::of(ExactBound::rational(value), value <= 0 ? "vacuous" : "");
}

/// C^p_m(n) with m = n - lambda_1 when lambda = (n-m, mu) meets the
/// hypotheses m >= 4 and n >= p(delta_p + m - 2); nullopt otherwise.
inline std::optional<Rational> theorem_A_bound(const Partition& lambda, PrimeChar p) {
    auto eval = theorem_A_evaluation(lambda, p);
    if (!eval.applicable)
        return std::nullopt;
    return eval.value->value();
}

inline BoundEvaluation james_evaluation(const Partition& lambda, PrimeChar p) {
    require_regular(lambda, p);
    int m = lambda.size() - lambda.first();
    if (m < 1 || m > 4)
        return BoundEvaluation::refused("m = n - lambda_1 = " + std::to_string(m) + " outside [1,4]");
    auto value = james_bound(m, lambda.size());
    return BoundEvaluation::of(ExactBound::rational(value), value <= 0 ? "vacuous" : "");
}

/// 2*3^((t-2)/3) with t = max(n - k, a).
inline ExactBound theorem_B_bound(int n, int k, int a) {
    if (k < 1 || k > n || a < 1)
        throw error(errc::bad_params, "need 1 <= k <= n and a >= 1 (n=" + std::to_string(n) +
                                          ", k=" + std::to_string(k) + ", a=" + std::to_string(a) + ")");
    return ExactBound::two_times_three_pow(std::max(n - k, a));
}

/// k = max(lambda_1, lambda^M_1).
inline int theorem_B_k(const Partition& lambda, PrimeChar p) {
    return std::max(lambda.first(), mullineux(lambda, p).first());
}

/// 2^{n - lambda_1} for 2-regular lambda.
inline Integer theorem_C_bound(const Partition& lambda) {
    require_nonempty(lambda);
    require_regular(lambda, PrimeChar(2));
    return pow_int(2, static_cast<unsigned>(lambda.size() - lambda.first()));
}

/// prod_{i >= p} ceil(i/(p-1))^{lambda_i} over 1-based row indices.
inline Integer lemma_L1_bound(const Partition& lambda, PrimeChar p) {
    require_regular(lambda, p);
    int q = p.value() - 1;
    Integer out = 1;
    for (int row = p.value(); row <= lambda.length(); ++row)
        out *= pow_int((row + q - 1) / q, static_cast<unsigned>(lambda.part(row)));
    return out;
}

/// 2^{n - lambda_1 - ... - lambda_{p-1}}, implied by lemma_L1_bound.
inline Integer lemma_L1_corollary(const Partition& lambda, PrimeChar p) {
    require_regular(lambda, p);
    int exponent = lambda.size();
    for (int row = 1; row < p.value(); ++row)
        exponent -= lambda.part(row);
    return pow_int(2, static_cast<unsigned>(exponent));
}

/// 2^b for D^{(a,b)} when a - b >= p - 1.
inline Integer two_row_bound(int a, int b, PrimeChar p) {
    if (b < 0 || a < b)
        throw error(errc::bad_params, "need a >= b >= 0");
    if (a - b < p.value() - 1)
        throw error(errc::precondition_failed, "a - b = " + std::to_string(a - b) + " < p - 1");
    return pow_int(2, static_cast<unsigned>(b));
}

inline BoundEvaluation two_row_evaluation(const Partition& lambda, PrimeChar p) {
    require_regular(lambda, p);
    if (lambda.length() > 2)
        return BoundEvaluation::refused("more than two rows");
    int a = lambda.part(1), b = lambda.part(2);
    if (a - b < p.value() - 1)
        return BoundEvaluation::refused("a - b = " + std::to_string(a - b) + " < p - 1");
    return BoundEvaluation::of(ExactBound::rational(Rational(two_row_bound(a, b, p))));
}

/// 2^{n - lambda_1} when first_row_condition holds.
inline std::optional<Integer> first_row_bound(const Partition& lambda, PrimeChar p) {
    require_regular(lambda, p);
    require_nonempty(lambda);
    if (!first_row_condition(lambda, p))
        return std::nullopt;
    return pow_int(2, static_cast<unsigned>(lambda.size() - lambda.first()));
}

/// (a-k+k/q) prod_{i<k}(a-i-1/q) - prod_{i<=k}(a-i); never negative on the
/// domain q >= 1, k >= 0, a >= k.
inline Rational lineq_margin(const Rational& q, int k, const Rational& a) {
    if (q < 1 || k < 0 || a < k)
        throw error(errc::bad_params, "need q >= 1, k >= 0, a >= k");
    Rational lhs = 1;
    for (int i = 0; i <= k; ++i)
        lhs *= a - i;
    Rational rhs = a - k + Rational(k) / q;
    for (int i = 0; i < k; ++i)
        rhs *= a - i - 1 / q;
    return rhs - lhs;
}

enum class AMode { safe, oracle, crystal };

inline std::string_view to_string(AMode mode) {
    switch (mode) {
    case AMode::safe: return "safe";
    case AMode::oracle: return "oracle";
    case AMode::crystal: return "crystal";
    }
    return "?";
}

inline AMode parse_a_mode(std::string_view text) {
    if (text == "safe")
        return AMode::safe;
    if (text == "oracle")
        return AMode::oracle;
    if (text == "crystal")
        return AMode::crystal;
    throw error(errc::bad_params, "unknown a-mode '" + std::string(text) + "'");
}

enum class BoundTag { A, james, B_safe, B_oracle, B_crystal, C, L1, two_row, first_row };

inline std::string_view to_string(BoundTag tag) {
    switch (tag) {
    case BoundTag::A: return "A";
    case BoundTag::james: return "james";
    case BoundTag::B_safe: return "B_safe";
    case BoundTag::B_oracle: return "B_oracle";
    case BoundTag::B_crystal: return "B_crystal";
    case BoundTag::C: return "C";
    case BoundTag::L1: return "L1";
    case BoundTag::two_row: return "two_row";
    case BoundTag::first_row: return "first_row";
    }
    return "?";
}

struct BoundEntry {
    BoundTag tag;
    BoundEvaluation eval;
    /// False for the crystal a-mode, whose a can overshoot the true a.
    bool guaranteed = true;
};

struct BoundReport {
    Partition lambda;
    int p = 2;
    std::vector<BoundEntry> entries;
    /// Largest guaranteed bound, never below the trivial bound 1.
    ExactBound best = ExactBound::rational(1);
    std::string best_tag = "trivial";

    const BoundEntry* find(BoundTag tag) const {
        for (const auto& e : entries)
            if (e.tag == tag)
                return &e;
        return nullptr;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["lambda"] = lambda.to_string();
        j["p"] = p;
        j["entries"] = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
            nlohmann::ordered_json item;
            item["tag"] = to_string(e.tag);
            item["applicable"] = e.eval.applicable;
            if (e.eval.value)
                item["value"] = e.eval.value->to_json();
            if (!e.eval.note.empty())
                item["notes"] = e.eval.note;
            if (!e.guaranteed)
                item["guaranteed"] = false;
            j["entries"].push_back(std::move(item));
        }
        j["best"] = best.to_json();
        j["best_tag"] = best_tag;
        return j;
    }
};

/// B entry for a given a. A one-dimensional D^lambda already is its
/// own one-dimensional submodule, so for lambda in {(n), (n)^M} the minimal
/// restriction depth is 0 rather than the supplied positive a.
inline BoundEvaluation theorem_B_evaluation(const Partition& lambda, PrimeChar p, std::optional<int> a) {
    if (p.value() == 2)
        return BoundEvaluation::refused("stated for p >= 3 only");
    int n = lambda.size();
    int k = theorem_B_k(lambda, p);
    if (!a)
        return BoundEvaluation::of(ExactBound::two_times_three_pow(n - k), "t = n - k = " + std::to_string(n - k));
    Partition trivial{n};
    if (lambda == trivial || lambda == mullineux(trivial, p))
        return BoundEvaluation::of(ExactBound::two_times_three_pow(n - k),
                                   "one-dimensional module, a = 0, t = " + std::to_string(n - k));
    auto bound = theorem_B_bound(n, k, *a);
    return BoundEvaluation::of(bound, "k = " + std::to_string(k) + ", a = " + std::to_string(*a) +
                                          ", t = " + std::to_string(bound.t()));
}

/// Evaluates every bound on lambda and keeps the largest guaranteed one.
inline BoundReport best_lower_bound(const Partition& lambda, PrimeChar p, AMode a_mode,
                                    std::optional<int> a_value = std::nullopt) {
    require_regular(lambda, p);
    require_nonempty(lambda);
    if (a_mode == AMode::oracle && !a_value)
        throw error(errc::missing_a, "oracle a-mode needs an a value");

    BoundReport report;
    report.lambda = lambda;
    report.p = p.value();
    report.entries.push_back({BoundTag::A, theorem_A_evaluation(lambda, p)});
    report.entries.push_back({BoundTag::james, james_evaluation(lambda, p)});
    report.entries.push_back({BoundTag::B_safe, theorem_B_evaluation(lambda, p, std::nullopt)});
    if (a_mode == AMode::oracle)
        report.entries.push_back({BoundTag::B_oracle, theorem_B_evaluation(lambda, p, a_value)});
    if (a_mode == AMode::crystal) {
        auto eval = theorem_B_evaluation(lambda, p, p.value() == 2 ? 1 : a_crystal(lambda, p));
        if (eval.applicable)
            eval.note += "; not guaranteed by the theorem";
        report.entries.push_back({BoundTag::B_crystal, std::move(eval), false});
    }
    if (p.value() == 2)
        report.entries.push_back({BoundTag::C, BoundEvaluation::of(ExactBound::rational(Rational(theorem_C_bound(lambda))))});
    else
        report.entries.push_back({BoundTag::C, BoundEvaluation::refused("p = 2 only")});
    report.entries.push_back({BoundTag::L1, BoundEvaluation::of(ExactBound::rational(Rational(lemma_L1_bound(lambda, p))))});
    report.entries.push_back({BoundTag::two_row, two_row_evaluation(lambda, p)});
    if (auto v = first_row_bound(lambda, p))
        report.entries.push_back({BoundTag::first_row, BoundEvaluation::of(ExactBound::rational(Rational(*v)))});
    else
        report.entries.push_back({BoundTag::first_row, BoundEvaluation::refused("first-row condition fails")});

    for (const auto& e : report.entries) {
        if (!e.guaranteed || !e.eval.applicable)
            continue;
        if (compare(*e.eval.value, report.best) > 0) {
            report.best = *e.eval.value;
            report.best_tag = std::string(to_string(e.tag));
        }
    }
    return report;
}

} // namespace symmod
