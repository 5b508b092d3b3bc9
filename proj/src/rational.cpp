#include "adinvar/rational.hpp"

#include "adinvar/error.hpp"

#include <cctype>

namespace adinvar {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::degenerate_form: return "degenerate_form";
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::invalid_representation: return "invalid_representation";
    case ErrorKind::not_naturally_reductive: return "not_naturally_reductive";
    case ErrorKind::degenerate_plane: return "degenerate_plane";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::parse: return "parse";
    case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
        throw Error(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");

    std::string n(num);
    if (n.front() == '+')
        n.erase(0, 1);
    mpz_class p(n, 10);
    mpz_class q(std::string(den), 10);
    if (q == 0)
        throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    Scalar r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Scalar& value) {
    return value.get_str(10);
}

}  // namespace adinvar
