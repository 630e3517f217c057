#pragma once

#include <string>

namespace polycert {

enum class Verdict { CertifiedStrict, CertifiedNonstrict, Inconclusive, Refuted };

inline std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::CertifiedStrict: return "CERTIFIED_STRICT";
        case Verdict::CertifiedNonstrict: return "CERTIFIED_NONSTRICT";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
        case Verdict::Refuted: return "REFUTED";
    }
    return "?";
}

}  // namespace polycert
