#include "derivar/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace derivar {

Rational rat_from_string(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("invalid rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto is_int = [](const std::string& t, bool allow_sign) {
        std::size_t i = (allow_sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (num.empty() || den.empty() || !is_int(num, true) || !is_int(den, false)) bad();
    Integer n(num), d(den);
    if (d == 0) bad();
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rational& r) {
    return r.get_str();
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

}  // namespace derivar
