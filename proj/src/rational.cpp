#include "riesz/rational.hpp"
#include "riesz/errors.hpp"

#include <cctype>

namespace riesz {

std::string format_rat(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat parse_rat(std::string_view text) {
    auto fail = [&] {
        throw precondition_error("not a rational: '" + std::string(text) +
                                 "' (expected \"num\" or \"num/den\")");
    };
    if (text.empty()) fail();

    std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);

    auto is_integer = [](std::string_view s, bool sign_ok) {
        if (s.empty()) return false;
        std::size_t start = 0;
        if (sign_ok && (s[0] == '-' || s[0] == '+')) start = 1;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!is_integer(num, true)) fail();
    if (slash != std::string_view::npos && !is_integer(den, false)) fail();

    Int n{std::string(num)};
    Int d = slash == std::string_view::npos ? Int(1) : Int{std::string(den)};
    if (d == 0) throw precondition_error("zero denominator in '" + std::string(text) + "'");
    return Rat(n, d);
}

Int floor_rat(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (q * denominator(r) > numerator(r)) --q;
    return q;
}

Int ceil_rat(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (q * denominator(r) < numerator(r)) ++q;
    return q;
}

Rat pow2(long k) {
    if (k >= 0) return Rat(Int(1) << k, Int(1));
    return Rat(Int(1), Int(1) << (-k));
}

Int isqrt_ceil(const Int& v) {
    if (v <= 0) return 0;
    Int s = boost::multiprecision::sqrt(v);
    if (s * s < v) ++s;
    return s;
}

} // namespace riesz
