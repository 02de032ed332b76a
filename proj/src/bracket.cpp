#include "wpbounds/bracket.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <system_error>

#include "wpbounds/errors.hpp"

namespace wpbounds {

ErrorBudget& ErrorBudget::operator+=(const ErrorBudget& other) {
    quadrature += other.quadrature;
    series_tail += other.series_tail;
    truncation += other.truncation;
    rounding += other.rounding;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    return *this;
}

Bracket& Bracket::operator+=(const Bracket& other) {
    lo += other.lo;
    hi += other.hi;
    budget += other.budget;
    return *this;
}

Bracket Bracket::scaled(double factor) const {
    if (!(factor >= 0.0)) throw DomainError("Bracket::scaled: factor must be nonnegative");
    Bracket out{lo * factor, hi * factor, budget};
    out.budget.quadrature *= factor;
    out.budget.series_tail *= factor;
    out.budget.truncation *= factor;
    out.budget.rounding *= factor;
    return out;
}

Bracket operator+(Bracket lhs, const Bracket& rhs) {
    lhs += rhs;
    return lhs;
}

std::ostream& operator<<(std::ostream& os, const Bracket& b) {
    const auto flags = os.flags();
    const auto prec = os.precision();
    os << std::setprecision(12) << '[' << b.lo << ", " << b.hi << ']';
    os.flags(flags);
    os.precision(prec);
    return os;
}

std::string truncate_decimals(double x, int places) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("truncate_decimals: need finite x >= 0");
    if (places < 0) throw DomainError("truncate_decimals: places must be nonnegative");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
    if (res.ec != std::errc{}) throw DomainError("truncate_decimals: formatting failed");
    std::string s(buf, res.ptr);
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        s += '.';
        dot = s.size() - 1;
    }
    const std::size_t want = dot + 1 + static_cast<std::size_t>(places);
    if (s.size() < want) s.append(want - s.size(), '0');
    s.resize(want);
    if (places == 0) s.pop_back();
    return s;
}

}  // namespace wpbounds
