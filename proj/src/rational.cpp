#include "algpencil/rational.hpp"

#include "algpencil/errors.hpp"

namespace algpencil {

Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw Error(ErrorCode::ParseError,
                    "bad rational literal: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    auto slash = text.find('/');
    auto is_int = [&](std::string_view s) {
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) fail();
            Int value{std::string(text)};
            return Rational(value);
        }
        std::string_view n = text.substr(0, slash);
        std::string_view d = text.substr(slash + 1);
        if (!is_int(n) || !is_int(d)) fail();
        Int ni{std::string(n)};
        Int di{std::string(d)};
        if (di == 0) fail();
        return Rational(ni, di);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail();
    }
    return Rational(0);  // unreachable
}

std::string rational_str(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace algpencil
