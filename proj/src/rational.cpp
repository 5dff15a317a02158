#include "tessella/rational.hpp"

#include "tessella/errors.hpp"

namespace tessella {

std::string fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_fraction(std::string_view text) {
    auto bad = [&] { throw InputError("bad rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Rational(Integer(std::string(text)));
        const std::string num(text.substr(0, slash));
        const std::string den(text.substr(slash + 1));
        if (num.empty() || den.empty()) bad();
        Integer d{den};
        if (d == 0) bad();
        return Rational(Integer(num), d);
    } catch (const std::runtime_error&) {
        bad();
    }
    return {};
}

} // namespace tessella
