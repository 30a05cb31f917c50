#pragma once

// Schur algorithm: Verblunsky parameters alpha_k = f_k(0) with
//   f_{k+1}(z) = (1/z) (f_k(z) - alpha_k) / (1 - alpha_k f_k(z)).
// All measures handled here are symmetric, so parameters are real.

#include "riesz/measure.hpp"
#include "riesz/rational.hpp"
#include "riesz/series.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace riesz {

enum class Field { exact, real };

/// exact for small budgets, real beyond kExactBudget.
enum class Precision { automatic, exact, real };

inline constexpr std::size_t kExactBudget = 256;

class VerblunskySequence {
public:
    static VerblunskySequence from_exact(std::vector<Rational> alphas, std::optional<std::size_t> terminated_at);
    static VerblunskySequence from_real(std::vector<double> alphas, std::optional<std::size_t> terminated_at);

    Field field() const noexcept { return field_; }
    std::size_t size() const noexcept { return alphas_.size(); }
    bool empty() const noexcept { return alphas_.empty(); }

    double alpha(std::size_t k) const { return alphas_.at(k); }
    double rho(std::size_t k) const { return rhos_.at(k); }

    /// Exact field only.
    const Rational& exact_alpha(std::size_t k) const;
    /// 1 - alpha_k^2; exact in the rational field, rounded otherwise.
    Rational rho_squared(std::size_t k) const;

    std::span<const double> alphas() const noexcept { return alphas_; }

    /// Index k with |alpha_k| = 1; the sequence ends there.
    std::optional<std::size_t> terminated_at() const noexcept { return terminated_at_; }

private:
    Field field_ = Field::real;
    std::vector<double> alphas_;
    std::vector<double> rhos_;
    std::vector<Rational> exact_;
    std::optional<std::size_t> terminated_at_;
};

/// Parameters alpha_0..alpha_{count-1}. Needs valid_order(f) >= count.
/// Iterates the step on the numerator/denominator pair of f_k, O(N) per step.
template <class Scalar>
VerblunskySequence schur_algorithm(const TruncatedSeries<Scalar>& f, std::size_t count);

/// Same iteration through series_reciprocal and series_shift_down, O(N^2) per
/// step. Kept as the reference for schur_algorithm.
template <class Scalar>
VerblunskySequence schur_algorithm_reference(const TruncatedSeries<Scalar>& f, std::size_t count);

extern template VerblunskySequence schur_algorithm(const ExactSeries&, std::size_t);
extern template VerblunskySequence schur_algorithm(const RealSeries&, std::size_t);
extern template VerblunskySequence schur_algorithm_reference(const ExactSeries&, std::size_t);
extern template VerblunskySequence schur_algorithm_reference(const RealSeries&, std::size_t);

/// Full pipeline: moments -> F -> f -> alpha_0..alpha_{count-1}.
VerblunskySequence verblunsky_parameters(const MeasureSpec& spec, std::size_t count,
                                         Precision precision = Precision::automatic);

/// Number of parameters a walk evolved for `steps` steps touches.
std::size_t parameter_budget(std::size_t steps);

/// xi_k = alpha_{mk-1}, k >= 1; element 0 holds xi_1. Throws PreconditionError if
/// any alpha off the sieve n = m-1 (mod m) is nonzero.
std::vector<double> nonzero_xi(const VerblunskySequence& seq, int m);
std::vector<Rational> nonzero_xi_exact(const VerblunskySequence& seq, int m);

} // namespace riesz
