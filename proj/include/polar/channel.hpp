#pragma once

#include "polar/code.hpp"
#include "polar/random.hpp"

namespace polar {

enum class SnrConvention { EbN0, EsN0 };

// BPSK over BI-AWGN. sigma = (2 R 10^{snr/10})^{-1/2} under Eb/N0,
// (2 10^{snr/10})^{-1/2} under Es/N0.
struct ChannelConfig {
    double snr_db = 0.0;
    SnrConvention convention = SnrConvention::EbN0;
    double rate = 0.0;
    double sigma = 0.0;

    static ChannelConfig make(double snr_db, SnrConvention convention, double rate);
};

double snr_to_sigma(double snr_db, SnrConvention convention, double rate);

// bit 0 -> +1, bit 1 -> -1; y = s + noise; LLR = 2 y / sigma^2.
LlrVector modulate_and_transmit(const Bits& codeword, double sigma, FrameRng& rng);

} // namespace polar
