#include "fsl/exponents.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace fsl {

std::string format_exponent(LebesgueExponent e) {
    if (e.is_infinite()) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.10g", e.p());
    return buf;
}

LebesgueExponent parse_exponent(const std::string& text) {
    std::string t = text;
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    if (t == "inf" || t == "infinity") return LebesgueExponent::infinity();
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end == t.c_str() || *end != '\0')
        throw InvalidArgumentError("cannot parse exponent '" + text + "'");
    return LebesgueExponent::from_p(v);
}

}  // namespace fsl
