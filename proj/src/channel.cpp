#include "polar/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace polar {

double snr_to_sigma(double snr_db, SnrConvention convention, double rate) {
    const double linear = std::pow(10.0, snr_db / 10.0);
    if (convention == SnrConvention::EbN0) {
        if (rate <= 0.0) {
            throw std::invalid_argument("snr_to_sigma: Eb/N0 needs a positive rate");
        }
        return 1.0 / std::sqrt(2.0 * rate * linear);
    }
    return 1.0 / std::sqrt(2.0 * linear);
}

ChannelConfig ChannelConfig::make(double snr_db, SnrConvention convention,
                                  double rate) {
    ChannelConfig config;
    config.snr_db = snr_db;
    config.convention = convention;
    config.rate = rate;
    config.sigma = snr_to_sigma(snr_db, convention, rate);
    return config;
}

LlrVector modulate_and_transmit(const Bits& codeword, double sigma, FrameRng& rng) {
    if (sigma <= 0.0) {
        throw std::invalid_argument("modulate_and_transmit: sigma must be positive");
    }
    const double scale = 2.0 / (sigma * sigma);
    LlrVector llrs(codeword.size());
    for (std::size_t i = 0; i < codeword.size(); ++i) {
        const double symbol = codeword[i] ? -1.0 : 1.0;
        const double received = symbol + sigma * rng.next_gaussian();
        llrs[i] = scale * received;
    }
    return llrs;
}

} // namespace polar
