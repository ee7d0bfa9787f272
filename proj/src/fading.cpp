#include "starcov/fading.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace starcov {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(name) + " must be strictly positive");
    }
}

// Mean of a Rayleigh envelope with scale delta.
double rayleigh_mean(double delta) { return delta * std::sqrt(kPi / 2.0); }

// Variance of a Rayleigh envelope with scale delta.
double rayleigh_variance(double delta) { return (4.0 - kPi) / 2.0 * delta * delta; }

struct HopMoments {
    double mean;
    double variance;
    double second() const { return mean * mean + variance; }
};

// Envelope moments of one LoS+diffuse hop: a + b*R with a = sqrt(K/(K+1))*los,
// b = sqrt(1/(K+1)), R Rayleigh(delta).
HopMoments rician_hop_moments(double k_factor, double delta, double los) {
    const double khat = k_factor + 1.0;
    const double a = std::sqrt(k_factor / khat) * los;
    const double b = std::sqrt(1.0 / khat);
    return {a + b * rayleigh_mean(delta), b * b * rayleigh_variance(delta)};
}

double sample_rayleigh(double delta, Rng& rng) {
    std::normal_distribution<double> normal(0.0, delta);
    const double re = normal(rng);
    const double im = normal(rng);
    return std::hypot(re, im);
}

double sample_rician_hop(double k_factor, double delta, double los, Rng& rng) {
    const double khat = k_factor + 1.0;
    return std::sqrt(k_factor / khat) * los +
           std::sqrt(1.0 / khat) * sample_rayleigh(delta, rng);
}

} // namespace

void validate(const FadingModel& model) {
    std::visit(
        [](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Rayleigh>) {
                require_positive(m.delta, "rayleigh delta");
            } else if constexpr (std::is_same_v<T, Nakagami>) {
                require_positive(m.omega, "nakagami omega");
                if (!(m.m >= 0.5) || !std::isfinite(m.m)) {
                    throw std::invalid_argument("nakagami shape must be >= 1/2");
                }
            } else if constexpr (std::is_same_v<T, Rician>) {
                require_positive(m.k_factor, "rician k_factor");
                require_positive(m.delta, "rician delta");
                require_positive(m.los, "rician los");
            } else if constexpr (std::is_same_v<T, Weibull>) {
                require_positive(m.shape, "weibull shape");
                require_positive(m.scale, "weibull scale");
            } else if constexpr (std::is_same_v<T, DoubleRayleigh>) {
                require_positive(m.delta1, "double-rayleigh delta1");
                require_positive(m.delta2, "double-rayleigh delta2");
            } else if constexpr (std::is_same_v<T, DoubleRician>) {
                require_positive(m.k1, "double-rician k1");
                require_positive(m.k2, "double-rician k2");
                require_positive(m.delta1, "double-rician delta1");
                require_positive(m.delta2, "double-rician delta2");
                require_positive(m.los1, "double-rician los1");
                require_positive(m.los2, "double-rician los2");
            }
        },
        model);
}

AmplitudeMoments moments(const FadingModel& model) {
    validate(model);
    return std::visit(
        [](const auto& m) -> AmplitudeMoments {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Rayleigh>) {
                return {rayleigh_mean(m.delta), rayleigh_variance(m.delta)};
            } else if constexpr (std::is_same_v<T, Nakagami>) {
                const double ratio =
                    std::exp(std::lgamma(m.m + 0.5) - std::lgamma(m.m));
                const double mean = ratio * std::sqrt(m.omega / m.m);
                return {mean, m.omega - mean * mean};
            } else if constexpr (std::is_same_v<T, Rician>) {
                const auto hop = rician_hop_moments(m.k_factor, m.delta, m.los);
                return {hop.mean, hop.variance};
            } else if constexpr (std::is_same_v<T, Weibull>) {
                const double g1 = std::tgamma(1.0 + 1.0 / m.shape);
                const double g2 = std::tgamma(1.0 + 2.0 / m.shape);
                const double mean = m.scale * g1;
                return {mean, m.scale * m.scale * (g2 - g1 * g1)};
            } else if constexpr (std::is_same_v<T, DoubleRayleigh>) {
                const double mean = kPi * m.delta1 * m.delta2 / 2.0;
                const double second = 4.0 * m.delta1 * m.delta1 * m.delta2 * m.delta2;
                return {mean, second - mean * mean};
            } else {
                // Product of independent hops: the mean multiplies and the
                // second raw moment multiplies, so the variance follows from
                // E[h^2] - mu^2 with per-hop E[hop^2] = mean^2 + variance.
                const auto h1 = rician_hop_moments(m.k1, m.delta1, m.los1);
                const auto h2 = rician_hop_moments(m.k2, m.delta2, m.los2);
                const double mean = h1.mean * h2.mean;
                const double second = h1.second() * h2.second();
                return {mean, second - mean * mean};
            }
        },
        model);
}

double sample_cascade_amplitude(const FadingModel& model, Rng& rng) {
    return std::visit(
        [&rng](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, Rayleigh>) {
                return sample_rayleigh(m.delta, rng);
            } else if constexpr (std::is_same_v<T, Nakagami>) {
                // Amplitude = sqrt(G) with G ~ Gamma(m, omega/m).
                std::gamma_distribution<double> gamma(m.m, m.omega / m.m);
                return std::sqrt(gamma(rng));
            } else if constexpr (std::is_same_v<T, Rician>) {
                return sample_rician_hop(m.k_factor, m.delta, m.los, rng);
            } else if constexpr (std::is_same_v<T, Weibull>) {
                std::weibull_distribution<double> weibull(m.shape, m.scale);
                return weibull(rng);
            } else if constexpr (std::is_same_v<T, DoubleRayleigh>) {
                return sample_rayleigh(m.delta1, rng) * sample_rayleigh(m.delta2, rng);
            } else {
                return sample_rician_hop(m.k1, m.delta1, m.los1, rng) *
                       sample_rician_hop(m.k2, m.delta2, m.los2, rng);
            }
        },
        model);
}

std::vector<double> sample_cascade_amplitudes(const FadingModel& model, std::size_t n,
                                              Rng& rng) {
    if (n == 0) {
        throw std::invalid_argument("element count must be >= 1");
    }
    validate(model);
    std::vector<double> out(n);
    for (auto& v : out) {
        v = sample_cascade_amplitude(model, rng);
    }
    return out;
}

const char* model_name(const FadingModel& model) {
    struct Namer {
        const char* operator()(const Rayleigh&) const { return "rayleigh"; }
        const char* operator()(const Nakagami&) const { return "nakagami"; }
        const char* operator()(const Rician&) const { return "rician"; }
        const char* operator()(const Weibull&) const { return "weibull"; }
        const char* operator()(const DoubleRayleigh&) const { return "double_rayleigh"; }
        const char* operator()(const DoubleRician&) const { return "double_rician"; }
    };
    return std::visit(Namer{}, model);
}

} // namespace starcov
