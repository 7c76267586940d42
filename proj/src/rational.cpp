#include "knotforms/rational.hpp"

#include <cctype>

namespace knotforms {

mpq_class parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational");
    // mpq_class accepts "p/q" but we validate shape first for a clear message.
    std::size_t slash = s.find('/');
    auto is_int = [](const std::string& part) {
        if (part.empty()) return false;
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(s)) throw ParseError("bad rational: " + text);
    } else {
        if (!is_int(s.substr(0, slash)) || !is_int(s.substr(slash + 1)))
            throw ParseError("bad rational: " + text);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + text);
    if (q.get_den() == 0) throw ZeroDenominator();
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

}  // namespace knotforms
