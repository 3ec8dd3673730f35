#include "holoprove/sequence.hpp"

#include "holoprove/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace holoprove {

void validate(const PRecurrence& rec) {
    if (rec.order() < 1) throw Error(ErrorKind::Usage, "recurrence order must be at least 1");
    if (rec.coefficients.front().is_zero()) {
        throw Error(ErrorKind::Usage, "leading recurrence coefficient is the zero polynomial");
    }
    for (const auto& c : rec.coefficients) {
        if (c.var() != 'n') throw Error(ErrorKind::Usage, "recurrence coefficients must be in n");
    }
    if (rec.valid_from < 0) throw Error(ErrorKind::Usage, "negative valid_from");
}

std::vector<Rational> conv_terms(const ChouletSpec& spec, std::size_t count) {
    if (count < 2) throw Error(ErrorKind::Usage, "conv_terms needs count >= 2");
    std::vector<Rational> a;
    a.reserve(count);
    a.push_back(spec.a0);
    a.push_back(spec.a1);
    for (std::size_t n = 1; n + 1 < count; ++n) {
        Rational acc = 0;
        for (std::size_t p = 0; p <= n; ++p) acc += a[p] * a[n - p];
        acc += spec.k * static_cast<long>(n + 1) + spec.l;
        a.push_back(acc);
    }
    return a;
}

std::vector<Rational> prec_eval(const PRecurrence& rec, const std::vector<Rational>& initial,
                                std::size_t count, bool require_integers) {
    validate(rec);
    if (initial.size() < static_cast<std::size_t>(rec.valid_from)) {
        throw Error(ErrorKind::Usage, "prec_eval needs at least valid_from initial terms");
    }
    if (initial.size() < static_cast<std::size_t>(rec.order())) {
        throw Error(ErrorKind::Usage, "prec_eval needs at least `order` initial terms");
    }
    std::vector<Rational> a(initial);
    a.reserve(std::max(count, initial.size()));
    const int r = rec.order();
    for (std::size_t n = initial.size(); n < count; ++n) {
        const Rational nn = static_cast<long>(n);
        const Rational lead = rec.coefficients[0].eval(nn);
        if (lead == 0) {
            throw Error(ErrorKind::SingularRecurrence,
                        "leading coefficient vanishes at n = " + std::to_string(n));
        }
        Rational acc = 0;
        for (int j = 1; j <= r; ++j) acc += rec.coefficients[static_cast<std::size_t>(j)].eval(nn) * a[n - j];
        Rational next = -acc / lead;
        if (require_integers && !is_integer(next)) {
            throw Error(ErrorKind::Integrality,
                        "a(" + std::to_string(n) + ") = " + to_string(next) + " is not an integer");
        }
        a.push_back(std::move(next));
    }
    return a;
}

std::size_t required_seed_length(const PRecurrence& rec) {
    validate(rec);
    std::size_t need = static_cast<std::size_t>(std::max(rec.valid_from, rec.order()));
    for (const Rational& root : rational_roots(rec.coefficients.front())) {
        if (root >= 0 && is_integer(root)) {
            need = std::max(need, static_cast<std::size_t>(root.get_num().get_ui()) + 1);
        }
    }
    return need;
}

namespace {

bool all_digits(const std::string& s, std::size_t from) {
    return from < s.size() && std::all_of(s.begin() + static_cast<long>(from), s.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
           });
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
    std::vector<BFileEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::string idx, val, extra;
        fields >> idx >> val;
        if (val.empty() || (fields >> extra)) throw ParseError(lineno, "expected '<n> <a(n)>'");
        const bool idx_ok = all_digits(idx, idx[0] == '-' ? 1 : 0);
        const bool val_ok = all_digits(val, val[0] == '-' ? 1 : 0);
        if (!idx_ok || !val_ok || idx.size() > 18) throw ParseError(lineno, "malformed b-file line");

        BFileEntry e{std::stoll(idx), Integer(val, 10)};
        if (!out.empty() && e.index <= out.back().index) {
            throw Error(ErrorKind::Format, "line " + std::to_string(lineno) +
                                               ": b-file indices must increase strictly");
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<BFileEntry> parse_bfile(const std::string& text) {
    std::istringstream in(text);
    return parse_bfile(in);
}

CrosscheckReport crosscheck(const std::vector<Rational>& computed,
                            const std::vector<BFileEntry>& reference, std::int64_t offset) {
    CrosscheckReport report;
    for (const auto& entry : reference) {
        const std::int64_t i = entry.index - offset;
        if (i < 0 || i >= static_cast<std::int64_t>(computed.size())) continue;
        ++report.compared;
        const Rational& mine = computed[static_cast<std::size_t>(i)];
        if (mine != Rational(entry.value)) {
            report.agree = false;
            report.first_mismatch = entry.index;
            report.computed_value = mine;
            report.reference_value = entry.value;
            return report;
        }
    }
    return report;
}

}  // namespace holoprove
