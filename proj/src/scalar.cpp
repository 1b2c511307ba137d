#include "yrk/scalar.hpp"

#include <cctype>

namespace yrk {

namespace {

// One real literal: "p/q" or integer (exact), possibly signed.
mpq_class parse_ratio(const std::string& t) {
    std::string s = t;
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw math_domain_error("empty scalar literal");
    mpq_class v(s);
    v.canonicalize();
    return v;
}

bool looks_float(const std::string& t) {
    return t.find('.') != std::string::npos || t.find('e') != std::string::npos ||
           t.find('E') != std::string::npos;
}

// Splits "a+bi" / "a-bi" / "bi" / "a" at the top-level sign before the
// imaginary unit. Accepts both 'i' and 'j' suffixes.
void split_complex(const std::string& t, std::string& re, std::string& im) {
    std::string s = t;
    re = "0";
    im.clear();
    if (!s.empty() && (s.back() == 'i' || s.back() == 'j')) {
        s.pop_back();
        // find the split point: last +/- not at position 0 and not after e/E or '/'
        size_t split = std::string::npos;
        for (size_t k = s.size(); k-- > 1;) {
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E' && s[k - 1] != '/')
                { split = k; break; }
        }
        if (split == std::string::npos) {
            im = s.empty() || s == "+" || s == "-" ? s + "1" : s;
        } else {
            re = s.substr(0, split);
            std::string tail = s.substr(split);
            im = (tail == "+" || tail == "-") ? tail + "1" : tail;
        }
    } else {
        re = s;
        im = "0";
    }
}

} // namespace

Scalar parse_exact_scalar(const std::string& text) {
    std::string re, im;
    split_complex(text, re, im);
    return Scalar(parse_ratio(re), parse_ratio(im));
}

Scalar parse_scalar(const std::string& text, Backend preferred) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    std::string re, im;
    split_complex(t, re, im);
    bool fl = looks_float(re) || looks_float(im);
    if (!fl && preferred == Backend::exact) return Scalar(parse_ratio(re), parse_ratio(im));
    auto num = [](const std::string& s) -> double {
        if (s.find('/') != std::string::npos) {
            mpq_class v(s);
            v.canonicalize();
            return v.get_d();
        }
        return std::stod(s);
    };
    return Scalar(std::complex<double>(num(re), num(im)));
}

} // namespace yrk
