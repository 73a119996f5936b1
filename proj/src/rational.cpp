#include "pvseq/rational.hpp"

#include <cctype>

namespace pvseq {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::from_string(const std::string& s) {
    std::string body = s;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    std::string num_part = body;
    std::string den_part = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
    }
    if (!all_digits(num_part) || !all_digits(den_part))
        throw std::invalid_argument("Rational: malformed scalar '" + s + "'");
    mpz_class num(num_part, 10);
    mpz_class den(den_part, 10);
    if (den == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

}  // namespace pvseq
