#include "isotonic/types.hpp"

namespace isotonic {

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::NonrelIsotonic: return "nonrel";
        case Branch::Harmonic1D: return "harmonic";
        case Branch::Oscillator3D: return "oscillator3d";
        case Branch::DiracSpin: return "spin";
        case Branch::DiracPseudospin: return "pseudospin";
        case Branch::KleinGordon: return "klein-gordon";
    }
    return "unknown";
}

}  // namespace isotonic
