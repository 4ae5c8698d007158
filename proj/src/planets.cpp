#include "kepler/planets.hpp"

namespace kepler::solar {

const std::array<PlanetRecord, 8>& load_planets() {
    static const std::array<PlanetRecord, 8> table = {{
        {"Mercury", 0.20563069},
        {"Venus", 0.00677323},
        {"Earth", 0.01671022},
        {"Mars", 0.09341233},
        {"Jupiter", 0.04839266},
        {"Saturn", 0.05415060},
        {"Uranus", 0.04716771},
        {"Neptune", 0.00858587},
    }};
    return table;
}

double planet_speed_ratio(const PlanetRecord& rec) {
    return (1.0 + rec.eps) / (1.0 - rec.eps);
}

}  // namespace kepler::solar
