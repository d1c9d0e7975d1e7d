#ifndef BELLSIM_GENERAL_PROTOCOL_HPP
#define BELLSIM_GENERAL_PROTOCOL_HPP

#include "bellsim/oracle.hpp"
#include "bellsim/slot_protocol.hpp"

namespace bellsim {

// Eight-bit one-way protocol for general (phased) von Neumann measurements,
// built from two rounds of the four-bit slot protocol. Round one runs on
// the phases (Alice x', Bob -y') and fixes a sign for each party; round two
// runs on the sign-adjusted angles and produces the outputs.
struct GeneralHidden {
    SlotHidden first;
    SlotHidden second;
};

GeneralHidden sample_general_hidden(RngStream& rng);

struct GeneralRunDetail {
    int a_prime = 0;
    int b_prime = 0;
    int a = 0;
    int b = 0;
};

// Both executions in order; `bob_rng` drives Bob's private coins (Alice
// needs none). Exposes the intermediate sign bits for verification against
// the phase-correlation law Pr[a'=b'] = cos^2((x'+y')/2).
GeneralRunDetail general_run_detail(const GeneralMeasurement& alice,
                                    const GeneralMeasurement& bob,
                                    const GeneralHidden& hidden, RngStream& bob_rng);

using GeneralProtocol =
    ProtocolSpec<GeneralMeasurement, GeneralMeasurement, GeneralHidden, GeneralHidden>;

GeneralProtocol make_general_protocol();

}  // namespace bellsim

#endif  // BELLSIM_GENERAL_PROTOCOL_HPP
