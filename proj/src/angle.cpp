#include "jones/angle.hpp"

#include <cctype>
#include <numbers>
#include <stdexcept>

namespace jones {

namespace {

double parse_number(const std::string& s) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
}

} // namespace

double parse_angle(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty angle");

    try {
        const std::size_t pi_pos = s.find("pi");
        if (pi_pos == std::string::npos) return parse_number(s);

        const std::string head = s.substr(0, pi_pos);
        const std::string tail = s.substr(pi_pos + 2);

        double coeff = 1.0;
        if (head == "-")
            coeff = -1.0;
        else if (head == "+" || head.empty())
            coeff = 1.0;
        else
            coeff = parse_number(head);

        double denom = 1.0;
        if (!tail.empty()) {
            if (tail[0] != '/') throw std::invalid_argument("expected '/denominator' after pi");
            denom = parse_number(tail.substr(1));
            if (denom == 0.0) throw std::invalid_argument("zero denominator");
        }
        return coeff * std::numbers::pi / denom;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse angle '" + text +
                                    "' (expected radians or a pi fraction like pi/6)");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("angle '" + text + "' out of range");
    }
}

} // namespace jones
