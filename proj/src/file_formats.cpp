#include "holoprove/file_formats.hpp"

#include "holoprove/error.hpp"
#include "holoprove/poly_format.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace holoprove {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in{std::string(text)};
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

// Reruns a parse step, attaching the line number to any parse error.
template <class F>
auto at_line(std::size_t lineno, F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(lineno, e.what());
    }
}

}  // namespace

ChouletSpec parse_spec_file(std::string_view text) {
    ChouletSpec spec;
    std::map<std::string, Rational*> slots{{"a0", &spec.a0}, {"a1", &spec.a1}, {"k", &spec.k}, {"l", &spec.l}};
    std::map<std::string, bool> seen;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view line = trim(lines[i]);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;

        std::size_t key_end = 0;
        while (key_end < line.size() && std::isalnum(static_cast<unsigned char>(line[key_end]))) ++key_end;
        const std::string key(line.substr(0, key_end));
        std::string_view value = trim(line.substr(key_end));
        if (!value.empty() && (value.front() == '=' || value.front() == ':')) value = trim(value.substr(1));

        auto slot = slots.find(key);
        if (slot == slots.end()) throw ParseError(i + 1, "unknown key '" + key + "'");
        if (seen[key]) throw ParseError(i + 1, "duplicate key '" + key + "'");
        if (value.empty()) throw ParseError(i + 1, "missing value for '" + key + "'");
        *slot->second = at_line(i + 1, [&] { return parse_rational(value); });
        seen[key] = true;
    }
    for (const auto& [key, slot] : slots) {
        if (!seen[key]) throw Error(ErrorKind::Format, "spec is missing key '" + key + "'");
    }
    return spec;
}

std::string format_spec_file(const ChouletSpec& spec) {
    return "a0 = " + to_string(spec.a0) + "\na1 = " + to_string(spec.a1) + "\nk = " + to_string(spec.k) +
           "\nl = " + to_string(spec.l) + "\n";
}

Certificate CertificateFile::certificate() const {
    if (!ode || !q) throw Error(ErrorKind::Format, "certificate file is a stub without an ODE");
    return Certificate{eq.p, *ode, *q, false};
}

CertificateFile make_certificate_file(const AlgebraicEq& eq, const Certificate& cert,
                                      std::vector<std::string> comments) {
    return CertificateFile{eq, cert.ode, cert.q, std::move(comments)};
}

std::string format_certificate_file(const CertificateFile& file) {
    std::string out(kCertificateHeader);
    out += '\n';
    for (const auto& c : file.comments) out += "#" + c + "\n";
    out += "P: " + format(file.eq.p) + "\n";
    if (file.ode) {
        out += "q0: " + format(file.ode->q0) + "\n";
        out += "q1: " + format(file.ode->q1) + "\n";
        out += "R: " + format(file.ode->r) + "\n";
    }
    if (file.q) out += "q: " + format(*file.q) + "\n";
    out += "branch: " + to_string(file.eq.branch_value) + "\n";
    return out;
}

CertificateFile parse_certificate_file(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    if (i == lines.size() || trim(lines[i]) != kCertificateHeader) {
        throw Error(ErrorKind::Format, "missing header '" + std::string(kCertificateHeader) + "'");
    }
    ++i;

    static constexpr std::array<std::string_view, 6> kLabels{"P", "q0", "q1", "R", "q", "branch"};
    std::map<std::string, std::pair<std::string, std::size_t>> values;  // label -> (text, line)
    CertificateFile file;

    for (; i < lines.size(); ++i) {
        const std::string_view raw = lines[i];
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            file.comments.emplace_back(trim(raw).substr(1));
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(i + 1, "expected 'label: value'");
        const std::string label(trim(line.substr(0, colon)));
        if (std::find(kLabels.begin(), kLabels.end(), label) == kLabels.end()) {
            throw ParseError(i + 1, "unknown section '" + label + "'");
        }
        if (values.count(label)) throw ParseError(i + 1, "duplicate section '" + label + "'");
        std::string value(trim(line.substr(colon + 1)));
        std::size_t value_line = i + 1;
        if (value.empty()) {
            // value on the next non-comment line
            std::size_t k = i + 1;
            while (k < lines.size() && (trim(lines[k]).empty() || trim(lines[k]).front() == '#')) ++k;
            if (k == lines.size()) throw ParseError(i + 1, "section '" + label + "' has no value");
            value = std::string(trim(lines[k]));
            value_line = k + 1;
            i = k;
        }
        values[label] = {value, value_line};
    }

    auto need = [&](const std::string& label) -> const std::pair<std::string, std::size_t>& {
        auto it = values.find(label);
        if (it == values.end()) throw Error(ErrorKind::Format, "missing section '" + label + "'");
        return it->second;
    };
    auto upoly_at = [&](const std::string& label) {
        const auto& [v, ln] = need(label);
        return at_line(ln, [&] { return parse_upoly(v, 'z'); });
    };

    const auto& [ptext, pline] = need("P");
    file.eq.p = at_line(pline, [&] { return parse_bipoly(ptext); });
    const auto& [btext, bline] = need("branch");
    file.eq.branch_value = at_line(bline, [&] { return parse_rational(btext); });

    const std::size_t ode_sections = values.count("q0") + values.count("q1") + values.count("R") + values.count("q");
    if (ode_sections != 0 && ode_sections != 4) {
        throw Error(ErrorKind::Format, "sections q0, q1, R, q must appear together");
    }
    if (ode_sections == 4) {
        file.ode = LinearOde{upoly_at("q0"), upoly_at("q1"), upoly_at("R")};
        file.q = upoly_at("q");
    }
    return file;
}

}  // namespace holoprove
