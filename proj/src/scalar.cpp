#include "freud/scalar.hpp"

#include <cmath>
#include <cstdlib>

namespace freud {

namespace {
int g_bits = 256;
}

int digits_for_bits(int bits) {
    return static_cast<int>(std::ceil(bits * 0.30102999566398119521)) + 2;
}

void set_working_precision(int bits) {
    if (bits < 64) throw std::invalid_argument("working precision must be at least 64 bits");
    g_bits = bits;
    // Operations on mixed-precision operands produce results at (at least) the
    // highest operand precision; the unit suite pins that behavior.
    Scalar::default_precision(digits_for_bits(bits));
}

int working_precision_bits() { return g_bits; }

Scalar scalar_from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty numeric string");
    // mpfr accepts some junk (e.g. trailing garbage is rejected, but lone '.' is not);
    // pre-validate the grammar: [+-]? digits [. digits]? ([eE][+-]?digits)?
    size_t i = 0;
    auto digits = [&](size_t& k) {
        size_t start = k;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        return k > start;
    };
    if (text[i] == '+' || text[i] == '-') ++i;
    bool intpart = digits(i);
    bool fracpart = false;
    if (i < text.size() && text[i] == '.') {
        ++i;
        fracpart = digits(i);
    }
    if (!intpart && !fracpart) throw std::invalid_argument("malformed number: " + text);
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        if (!digits(i)) throw std::invalid_argument("malformed exponent: " + text);
    }
    if (i != text.size()) throw std::invalid_argument("malformed number: " + text);
    return Scalar(text);
}

std::string to_decimal(const Scalar& value, int digits) {
    if (digits < 2) digits = 2;
    if (value == 0) return "0";
    std::string s = value.str(digits, std::ios_base::scientific);
    auto epos = s.find_first_of("eE");
    std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
    long expo = epos == std::string::npos ? 0 : std::strtol(s.c_str() + epos + 1, nullptr, 10);
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    std::string dig;
    for (char c : mant)
        if (c != '.') dig.push_back(c);
    while (dig.size() > 1 && dig.back() == '0') dig.pop_back();
    std::string out;
    long nd = static_cast<long>(dig.size());
    if (expo >= 0 && expo < digits + 2) {
        // positional: digits d0.d1d2... scaled by 10^expo
        if (expo + 1 >= nd) {
            out = dig + std::string(static_cast<size_t>(expo + 1 - nd), '0');
        } else {
            out = dig.substr(0, static_cast<size_t>(expo) + 1) + "." +
                  dig.substr(static_cast<size_t>(expo) + 1);
        }
    } else if (expo < 0 && expo >= -6) {
        out = "0." + std::string(static_cast<size_t>(-expo - 1), '0') + dig;
    } else {
        out = dig.substr(0, 1);
        if (nd > 1) out += "." + dig.substr(1);
        out += "e" + std::to_string(expo);
    }
    return neg ? "-" + out : out;
}

std::string rational_to_string(const Rational& value) {
    return value.str();
}

Scalar pi_value() {
    return 4 * atan(Scalar(1));
}

Scalar pow10(long exponent) {
    return pow(Scalar(10), static_cast<int>(exponent));
}

}  // namespace freud
