#include "riesz/schur.hpp"

#include "riesz/errors.hpp"

#include <cmath>
#include <string>
#include <type_traits>

namespace riesz {

namespace {

constexpr double kBreakdownTolerance = 1e-9;
constexpr double kTerminationTolerance = 1e-12;
constexpr double kSieveTolerance = 1e-10;

// True when |alpha| = 1. Throws once a double-path alpha leaves the disk.
bool hits_unit_circle(const Rational& alpha)
{
    return abs(alpha) == 1;
}

bool hits_unit_circle(double alpha)
{
    const double a = std::abs(alpha);
    if (!std::isfinite(alpha) || a > 1.0 + kBreakdownTolerance)
        throw NumericalBreakdown("Schur algorithm left the unit disk (|alpha| = " + std::to_string(a) +
                                 "); use the exact path");
    return std::abs(a - 1.0) <= kTerminationTolerance;
}

bool is_zero(const Rational& v) { return sgn(v) == 0; }
bool is_zero(double v) { return v == 0.0; }

template <class Scalar>
void require_order(const TruncatedSeries<Scalar>& f, std::size_t count)
{
    if (f.valid_order() < count)
        throw PreconditionError("schur_algorithm: " + std::to_string(count) +
                                " parameters requested but the series only supports " +
                                std::to_string(f.valid_order()));
}

template <class Scalar>
VerblunskySequence make_sequence(std::vector<Scalar> alphas, std::optional<std::size_t> terminated)
{
    if constexpr (std::is_same_v<Scalar, Rational>)
        return VerblunskySequence::from_exact(std::move(alphas), terminated);
    else
        return VerblunskySequence::from_real(std::move(alphas), terminated);
}

} // namespace

VerblunskySequence VerblunskySequence::from_exact(std::vector<Rational> alphas,
                                                  std::optional<std::size_t> terminated_at)
{
    VerblunskySequence seq;
    seq.field_ = Field::exact;
    for (const auto& a : alphas) {
        if (abs(a) > 1)
            throw ArgumentError("Verblunsky parameter outside the closed unit disk: " + a.get_str());
        seq.alphas_.push_back(a.get_d());
        const Rational rho2 = 1 - a * a;
        seq.rhos_.push_back(std::sqrt(rho2.get_d()));
    }
    seq.exact_ = std::move(alphas);
    seq.terminated_at_ = terminated_at;
    return seq;
}

VerblunskySequence VerblunskySequence::from_real(std::vector<double> alphas, std::optional<std::size_t> terminated_at)
{
    VerblunskySequence seq;
    seq.field_ = Field::real;
    for (double a : alphas) {
        if (!(std::abs(a) <= 1.0 + kBreakdownTolerance))
            throw ArgumentError("Verblunsky parameter outside the closed unit disk: " + std::to_string(a));
        seq.rhos_.push_back(std::sqrt(std::max(0.0, 1.0 - a * a)));
    }
    seq.alphas_ = std::move(alphas);
    seq.terminated_at_ = terminated_at;
    return seq;
}

const Rational& VerblunskySequence::exact_alpha(std::size_t k) const
{
    if (field_ != Field::exact)
        throw PreconditionError("exact_alpha: sequence was computed in double precision");
    return exact_.at(k);
}

Rational VerblunskySequence::rho_squared(std::size_t k) const
{
    if (field_ == Field::exact) {
        const auto& a = exact_.at(k);
        return 1 - a * a;
    }
    const double a = alphas_.at(k);
    return Rational(1.0 - a * a);
}

template <class Scalar>
VerblunskySequence schur_algorithm(const TruncatedSeries<Scalar>& f, std::size_t count)
{
    require_order(f, count);

    // f_k = A_k / B_k. Both buffers hold order N - k live coefficients; A is
    // read from `shift` onward so that dividing by z is an index bump.
    std::vector<Scalar> num(f.coeffs().begin(), f.coeffs().end());
    std::vector<Scalar> den(num.size(), Scalar(0));
    den[0] = 1;
    std::size_t shift = 0;
    std::size_t live = num.size();

    std::vector<Scalar> alphas;
    alphas.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Scalar alpha = num[shift] / den[0];
        const bool terminated = hits_unit_circle(alpha);
        alphas.push_back(alpha);
        if (terminated)
            return make_sequence(std::move(alphas), k);
        if (k + 1 == count)
            break;

        if (!is_zero(alpha)) {
            for (std::size_t i = 0; i < live; ++i) {
                Scalar a = num[shift + i];
                Scalar b = den[i];
                num[shift + i] = a - alpha * b;
                den[i] = b - alpha * a;
            }
            const Scalar scale = Scalar(1) / den[0];
            for (std::size_t i = 0; i < live; ++i) {
                num[shift + i] *= scale;
                den[i] *= scale;
            }
        }
        if (!ScalarTraits<Scalar>::negligible(num[shift], kShiftTolerance))
            throw PreconditionError("schur_algorithm: step " + std::to_string(k) + " is not divisible by z");
        ++shift;
        --live;
    }
    return make_sequence(std::move(alphas), std::nullopt);
}

template <class Scalar>
VerblunskySequence schur_algorithm_reference(const TruncatedSeries<Scalar>& f, std::size_t count)
{
    require_order(f, count);
    TruncatedSeries<Scalar> fk = f;
    std::vector<Scalar> alphas;
    for (std::size_t k = 0; k < count; ++k) {
        Scalar alpha = fk[0];
        const bool terminated = hits_unit_circle(alpha);
        alphas.push_back(alpha);
        if (terminated)
            return make_sequence(std::move(alphas), k);
        if (k + 1 == count)
            break;
        const auto numerator = fk - alpha;
        const auto denominator = TruncatedSeries<Scalar>::constant(Scalar(1), fk.valid_order()) - alpha * fk;
        fk = series_shift_down(series_mul(numerator, series_reciprocal(denominator)), 1);
    }
    return make_sequence(std::move(alphas), std::nullopt);
}

template VerblunskySequence schur_algorithm(const ExactSeries&, std::size_t);
template VerblunskySequence schur_algorithm(const RealSeries&, std::size_t);
template VerblunskySequence schur_algorithm_reference(const ExactSeries&, std::size_t);
template VerblunskySequence schur_algorithm_reference(const RealSeries&, std::size_t);

VerblunskySequence verblunsky_parameters(const MeasureSpec& spec, std::size_t count, Precision precision)
{
    if (precision == Precision::automatic)
        precision = count <= kExactBudget ? Precision::exact : Precision::real;
    // f loses one order against F, and the algorithm wants order >= count.
    const auto F = caratheodory_series(spec, count + 1);
    if (precision == Precision::exact)
        return schur_algorithm(schur_series(F), count);
    return schur_algorithm(schur_series(to_real(F)), count);
}

std::size_t parameter_budget(std::size_t steps)
{
    // Blocks up to site steps + 1 read alpha_{2(steps+1)+1}.
    return 2 * (steps + 1) + 2;
}

namespace {

template <class Out, class Get, class IsZero>
std::vector<Out> sieve(const VerblunskySequence& seq, int m, Get get, IsZero is_zero_at)
{
    if (m < 2)
        throw ArgumentError("nonzero_xi: fold must be at least 2");
    std::vector<Out> xi;
    const auto mm = static_cast<std::size_t>(m);
    for (std::size_t n = 0; n < seq.size(); ++n) {
        if (n % mm == mm - 1) {
            xi.push_back(get(n));
        } else if (!is_zero_at(n)) {
            throw StructureViolation("alpha_" + std::to_string(n) + " = " + std::to_string(seq.alpha(n)) +
                                     " is off the sieve n = " + std::to_string(m - 1) + " (mod " +
                                     std::to_string(m) + ")");
        }
    }
    return xi;
}

} // namespace

std::vector<double> nonzero_xi(const VerblunskySequence& seq, int m)
{
    const bool exact = seq.field() == Field::exact;
    return sieve<double>(
        seq, m, [&](std::size_t n) { return seq.alpha(n); },
        [&](std::size_t n) {
            return exact ? sgn(seq.exact_alpha(n)) == 0 : std::abs(seq.alpha(n)) <= kSieveTolerance;
        });
}

std::vector<Rational> nonzero_xi_exact(const VerblunskySequence& seq, int m)
{
    if (seq.field() != Field::exact)
        throw PreconditionError("nonzero_xi_exact: sequence was computed in double precision");
    return sieve<Rational>(
        seq, m, [&](std::size_t n) { return seq.exact_alpha(n); },
        [&](std::size_t n) { return sgn(seq.exact_alpha(n)) == 0; });
}

} // namespace riesz
