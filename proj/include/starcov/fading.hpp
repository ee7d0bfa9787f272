#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "starcov/rng.hpp"

namespace starcov {

// Small-scale fading families for the cascaded per-element amplitude of a
// surface-assisted link. Each model describes the distribution of one
// element's end-to-end amplitude; the Double* models are explicit two-hop
// products, the others treat the cascade as a single draw.

struct Rayleigh {
    double delta; // scale of the underlying complex Gaussian components
};

struct Nakagami {
    double m;     // shape, >= 1/2
    double omega; // spread (mean power)
};

// Line-of-sight plus diffuse mixture: amplitude = sqrt(K/(K+1))*los +
// sqrt(1/(K+1))*R with R Rayleigh(delta). The mixture is applied on the
// envelope, so the closed-form mean/variance below are exact for the
// sampled amplitudes.
struct Rician {
    double k_factor; // LoS-to-diffuse power ratio, > 0
    double delta;    // diffuse Rayleigh scale
    double los;      // deterministic LoS amplitude
};

struct Weibull {
    double shape;
    double scale;
};

struct DoubleRayleigh {
    double delta1;
    double delta2;
};

// Product of two independent Rician-mixture hops (see Rician above).
struct DoubleRician {
    double k1, k2;
    double delta1, delta2;
    double los1, los2;
};

using FadingModel =
    std::variant<Rayleigh, Nakagami, Rician, Weibull, DoubleRayleigh, DoubleRician>;

struct AmplitudeMoments {
    double mean;     // mu_r
    double variance; // sigma_r^2
    double second_moment() const { return mean * mean + variance; }
};

// Throws std::invalid_argument naming the offending parameter.
void validate(const FadingModel& model);

// Closed-form mean/variance of the cascaded per-element amplitude.
AmplitudeMoments moments(const FadingModel& model);

// One draw of the cascaded amplitude. Deterministic given engine state.
double sample_cascade_amplitude(const FadingModel& model, Rng& rng);

// n independent draws; validates the model once up front.
std::vector<double> sample_cascade_amplitudes(const FadingModel& model, std::size_t n,
                                              Rng& rng);

// Human-readable tag, used in CSV output and config parsing.
const char* model_name(const FadingModel& model);

} // namespace starcov
