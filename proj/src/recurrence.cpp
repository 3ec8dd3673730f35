#include "holoprove/recurrence.hpp"

#include "holoprove/error.hpp"
#include "holoprove/poly_format.hpp"

#include <algorithm>
#include <cctype>

namespace holoprove {

namespace {

// Coefficient of a(n-j) before renumbering: q0_j + q1_{j+1} (n - j).
UPoly raw_coefficient(const LinearOde& ode, int j) {
    const Rational lin = ode.q1.coeff(j + 1);
    return UPoly({ode.q0.coeff(j) - lin * j, lin}, 'n');
}

// p(n + s) for a polynomial in n.
UPoly shift_argument(const UPoly& p, int s) {
    UPoly out('n');
    const UPoly arg({Rational(s), 1}, 'n');
    for (int i = p.degree(); i >= 0; --i) out = out * arg + UPoly::constant(p.coeff(i), 'n');
    return out;
}

std::string index_text(int j) { return j == 0 ? "a(n)" : "a(n-" + std::to_string(j) + ")"; }

}  // namespace

PRecurrence extract_recurrence(const LinearOde& ode) {
    if (ode.q1.is_zero()) throw Error(ErrorKind::Usage, "extract_recurrence needs q1 != 0");

    const int top = std::max({0, ode.q0.degree(), ode.q1.degree() - 1});
    std::vector<UPoly> raw;  // raw[j + 1] holds j = -1..top
    for (int j = -1; j <= top; ++j) raw.push_back(raw_coefficient(ode, j));

    const auto first = std::find_if(raw.begin(), raw.end(), [](const UPoly& p) { return !p.is_zero(); });
    const int shift = static_cast<int>(first - raw.begin()) - 1;

    PRecurrence rec;
    for (auto it = first; it != raw.end(); ++it) rec.coefficients.push_back(shift_argument(*it, shift));
    while (rec.coefficients.size() > 1 && rec.coefficients.back().is_zero()) rec.coefficients.pop_back();
    while (rec.coefficients.size() < 2) rec.coefficients.emplace_back('n');

    rec.valid_from = std::max({ode.r.degree() + 1 - shift, rec.order(), -shift, 0});
    return rec;
}

RecurrenceCheck verify_recurrence(const PRecurrence& rec, const std::vector<Rational>& terms) {
    validate(rec);
    if (terms.size() <= static_cast<std::size_t>(rec.valid_from)) {
        throw Error(ErrorKind::Usage, "verify_recurrence needs more than valid_from terms");
    }
    RecurrenceCheck check;
    for (std::size_t n = static_cast<std::size_t>(rec.valid_from); n < terms.size(); ++n) {
        const Rational nn = static_cast<long>(n);
        Rational acc = 0;
        for (int j = 0; j <= rec.order(); ++j) {
            acc += rec.coefficients[static_cast<std::size_t>(j)].eval(nn) * terms[n - static_cast<std::size_t>(j)];
        }
        ++check.checked;
        if (acc != 0) {
            check.ok = false;
            check.first_failure = static_cast<long>(n);
            check.residual = acc;
            return check;
        }
    }
    return check;
}

std::string format_recurrence(const PRecurrence& rec) {
    std::string out;
    for (int j = 0; j <= rec.order(); ++j) {
        const UPoly& c = rec.coefficients[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + format(c, {TermOrder::Descending, false}) + ")*" + index_text(j);
    }
    if (out.empty()) out = "0";
    return out + " = 0  [n >= " + std::to_string(rec.valid_from) + "]";
}

std::string format_recurrence_factored(const PRecurrence& rec) {
    std::string out;
    for (int j = 0; j <= rec.order(); ++j) {
        const UPoly& c = rec.coefficients[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        std::string body;
        bool negative = false;
        if (c.degree() == 0) {
            negative = c.coeff(0) < 0;
            const Rational mag = abs(c.coeff(0));
            body = (mag == 1 ? "" : to_string(mag) + "*") + index_text(j);
        } else {
            const Rational ct = content(c);
            const UPoly prim = c * (Rational(1) / ct);
            body = (ct == 1 ? "" : to_string(ct) + "*") + "(" +
                   format(prim, {TermOrder::Descending, false}) + ")*" + index_text(j);
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    if (out.empty()) out = "0";
    return out + " = 0  [n >= " + std::to_string(rec.valid_from) + "]";
}

PRecurrence parse_recurrence(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };

    std::string_view body = trim(text);
    std::optional<int> valid_from;
    if (const auto lb = body.rfind('['); lb != std::string_view::npos) {
        std::string_view guard = trim(body.substr(lb));
        body = trim(body.substr(0, lb));
        const auto ge = guard.find(">=");
        if (guard.back() != ']' || ge == std::string_view::npos) throw ParseError(0, "malformed range guard");
        const Rational k = parse_rational(guard.substr(ge + 2, guard.size() - ge - 3));
        if (!is_integer(k) || k < 0) throw ParseError(0, "range guard must be a non-negative integer");
        valid_from = static_cast<int>(k.get_num().get_si());
    }

    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError(0, "expected '= 0'");
    if (trim(body.substr(eq + 1)) != "0") throw ParseError(0, "right-hand side must be 0");
    const std::string_view lhs = body.substr(0, eq);

    std::vector<UPoly> coeffs;
    std::size_t pos = 0;
    for (;;) {
        const auto at = lhs.find("a(", pos);
        if (at == std::string_view::npos) {
            if (!trim(lhs.substr(pos)).empty()) throw ParseError(0, "trailing text after last term");
            break;
        }
        std::string_view coef = trim(lhs.substr(pos, at - pos));
        if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
        UPoly c('n');
        if (coef.empty() || coef == "+") {
            c = UPoly::constant(1, 'n');
        } else if (coef == "-") {
            c = UPoly::constant(-1, 'n');
        } else {
            c = parse_upoly(coef, 'n');
        }

        const auto close = lhs.find(')', at);
        if (close == std::string_view::npos) throw ParseError(0, "unterminated a(...)");
        std::string index;
        for (char ch : lhs.substr(at + 2, close - at - 2)) {
            if (!std::isspace(static_cast<unsigned char>(ch))) index.push_back(ch);
        }
        int j = 0;
        if (index == "n") {
            j = 0;
        } else if (index.size() > 2 && index.starts_with("n-") &&
                   std::all_of(index.begin() + 2, index.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
            j = std::stoi(index.substr(2));
        } else {
            throw ParseError(0, "unsupported index 'a(" + index + ")'");
        }
        if (static_cast<int>(coeffs.size()) <= j) coeffs.resize(static_cast<std::size_t>(j) + 1, UPoly('n'));
        coeffs[static_cast<std::size_t>(j)] += c;
        pos = close + 1;
    }

    PRecurrence rec;
    rec.coefficients = std::move(coeffs);
    while (rec.coefficients.size() < 2) rec.coefficients.emplace_back('n');
    rec.valid_from = valid_from.value_or(rec.order());
    validate(rec);
    return rec;
}

}  // namespace holoprove
