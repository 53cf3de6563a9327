// SPDX-License-Identifier: Apache-2.0
//
// anmimo: ergodic secrecy rates of artificial-noise MIMO systems under
// receiver-side correlated Rayleigh fading.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#ifndef ANMIMO_SYSTEM_CONFIG_HPP
#define ANMIMO_SYSTEM_CONFIG_HPP

#include <cmath>
#include <stdexcept>

#include "anmimo/corr.hpp"

namespace anmimo {

// One full wiretap scenario: transmitter with t antennas, legitimate receiver
// with r, eavesdropper with e (t > e so the noise directions stay hidden),
// total transmit power P spread equally over the antennas, and the stream
// split s1 (message) + s2 (noise) = t. When the eavesdropper's correlation is
// unknown it is replaced by the identity, the worst case for secrecy.
struct SystemConfig {
    int t = 6;
    int r = 4;
    int e = 4;
    double power = 1.0; // linear P
    int s1 = 2;
    int s2 = 4;
    CorrelationSpec bob_corr{4, 0.8, 30.0, 10.0};
    CorrelationSpec eve_corr{4, 0.8, 30.0, 10.0};
    bool eve_corr_known = true;

    double rho() const { return power / t; }

    void validate() const {
        if (t < 1) throw std::invalid_argument("SystemConfig: t must be >= 1");
        if (r < 1) throw std::invalid_argument("SystemConfig: r must be >= 1");
        if (e < 0) throw std::invalid_argument("SystemConfig: e must be >= 0");
        if (t <= e)
            throw std::invalid_argument(
                "SystemConfig: t must exceed e (noise directions are not concealable otherwise)");
        if (!(power > 0)) throw std::invalid_argument("SystemConfig: power must be > 0");
        if (s1 + s2 != t) throw std::invalid_argument("SystemConfig: s1 + s2 must equal t");
        if (s1 < 1 || s1 > std::min(t, r))
            throw std::invalid_argument("SystemConfig: s1 must lie in 1..min(t, r)");
        if (s2 < 0) throw std::invalid_argument("SystemConfig: s2 must be >= 0");
        CorrelationSpec bc = bob_corr;
        bc.antennas = r;
        bc.validate();
        if (e > 0) {
            CorrelationSpec ec = eve_corr;
            ec.antennas = e;
            ec.validate();
        }
    }

    CorrelationMatrix bob_R() const {
        CorrelationSpec s = bob_corr;
        s.antennas = r;
        return build_correlation(s);
    }

    CorrelationMatrix eve_R() const {
        if (!eve_corr_known) return identity_correlation(e);
        CorrelationSpec s = eve_corr;
        s.antennas = e;
        return build_correlation(s);
    }

    SystemConfig with_s1(int new_s1) const {
        SystemConfig c = *this;
        c.s1 = new_s1;
        c.s2 = t - new_s1;
        return c;
    }

    SystemConfig with_snr_db(double snr_db) const {
        SystemConfig c = *this;
        c.power = std::pow(10.0, snr_db / 10.0);
        return c;
    }
};

} // namespace anmimo

#endif // ANMIMO_SYSTEM_CONFIG_HPP
