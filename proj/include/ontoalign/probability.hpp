#pragma once

// Probability combinators under the mutual-independence assumption.
// Every scoring formula in the engine is assembled from these.

#include <cmath>
#include <initializer_list>
#include <ranges>
#include <stdexcept>

namespace ontoalign {

namespace detail {
inline void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability out of [0,1] range");
    }
}
}  // namespace detail

[[nodiscard]] inline double p_and(double a, double b) {
    detail::check_probability(a);
    detail::check_probability(b);
    return a * b;
}

[[nodiscard]] inline double p_or(double a, double b) {
    detail::check_probability(a);
    detail::check_probability(b);
    return 1.0 - (1.0 - a) * (1.0 - b);
}

[[nodiscard]] inline double p_not(double a) {
    detail::check_probability(a);
    return 1.0 - a;
}

// Noisy-OR: probability that at least one independent event happens.
// Streams over the range; an empty range yields 0.
template <std::ranges::input_range R>
[[nodiscard]] double p_exists(R&& probabilities) {
    double none = 1.0;
    for (double p : probabilities) {
        detail::check_probability(p);
        none *= 1.0 - p;
    }
    return 1.0 - none;
}

[[nodiscard]] inline double p_exists(std::initializer_list<double> probabilities) {
    return p_exists(std::ranges::subrange(probabilities.begin(), probabilities.end()));
}

// Probability that all independent events happen; empty product is 1.
template <std::ranges::input_range R>
[[nodiscard]] double p_forall(R&& probabilities) {
    double all = 1.0;
    for (double p : probabilities) {
        detail::check_probability(p);
        all *= p;
    }
    return all;
}

[[nodiscard]] inline double p_forall(std::initializer_list<double> probabilities) {
    return p_forall(std::ranges::subrange(probabilities.begin(), probabilities.end()));
}

// Expected number of independent events that happen.
template <std::ranges::input_range R>
[[nodiscard]] double expected_count(R&& probabilities) {
    double sum = 0.0;
    for (double p : probabilities) {
        detail::check_probability(p);
        sum += p;
    }
    return sum;
}

[[nodiscard]] inline double expected_count(std::initializer_list<double> probabilities) {
    return expected_count(std::ranges::subrange(probabilities.begin(), probabilities.end()));
}

// Incremental noisy-OR accumulator for hot loops that fold many factors
// without building a sequence.
class NoisyOr {
public:
    void add(double p) {
        detail::check_probability(p);
        none_ *= 1.0 - p;
    }

    // Folds a pre-multiplied complement factor (1 - p). No range check:
    // callers feed products of checked probabilities.
    void add_complement(double one_minus_p) { none_ *= one_minus_p; }

    [[nodiscard]] double value() const { return 1.0 - none_; }
    [[nodiscard]] double complement() const { return none_; }
    [[nodiscard]] bool saturated() const { return none_ == 0.0; }

private:
    double none_ = 1.0;
};

}  // namespace ontoalign
