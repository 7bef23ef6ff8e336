#include "ffht/text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace ffht {

namespace {

std::string strip_ws(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

/// Splits "re+imj" into the two coefficient texts. The imaginary token is
/// the suffix before the trailing 'j': a parenthesized group, a bare
/// integer, or empty (meaning 1).
void split_gi(const std::string& s, std::string& re_text, std::string& im_text) {
    std::string body = s.substr(0, s.size() - 1);
    std::string prefix;
    if (!body.empty() && body.back() == ')') {
        size_t open = body.rfind('(');
        if (open == std::string::npos)
            throw error(errc::parse_error, "unmatched ')' before j in \"" + s + "\"");
        im_text = body.substr(open + 1, body.size() - open - 2);
        if (im_text.empty())
            throw error(errc::parse_error, "empty parenthesized coefficient in \"" + s + "\"");
        prefix = body.substr(0, open);
    } else {
        size_t i = body.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(body[i - 1]))) --i;
        im_text = body.substr(i);
        if (im_text.empty()) im_text = "1";
        prefix = body.substr(0, i);
    }
    if (prefix.empty()) {
        re_text.clear();
        return;
    }
    if (prefix.back() != '+' || prefix.size() == 1)
        throw error(errc::parse_error,
                    "malformed imaginary part at position " + std::to_string(prefix.size()) +
                        " in \"" + s + "\"");
    re_text = prefix.substr(0, prefix.size() - 1);
}

std::string render_grid(const char* title, const std::vector<std::vector<GiElement>>& grid,
                        int64_t n) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"k\\i"};
    for (int64_t i = 0; i < n; ++i) header.push_back(std::to_string(i));
    rows.push_back(std::move(header));
    for (int64_t k = 0; k < n; ++k) {
        std::vector<std::string> row{std::to_string(k)};
        for (int64_t i = 0; i < n; ++i) row.push_back(render_gi(grid[size_t(k)][size_t(i)]));
        rows.push_back(std::move(row));
    }

    size_t width = 0;
    for (const auto& row : rows)
        for (const auto& cell : row) width = std::max(width, cell.size());

    std::ostringstream out;
    out << title << ":\n";
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << ' ';
            out << std::string(width - row[c].size(), ' ') << row[c];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace

std::string render_gi(const GiElement& x) {
    if (x.im.is_zero()) return to_string(x.re);
    std::string jtok;
    if (x.im.is_one()) {
        jtok = "j";
    } else {
        std::string b = to_string(x.im);
        jtok = (b.find('x') == std::string::npos) ? b + "j" : "(" + b + ")j";
    }
    if (x.re.is_zero()) return jtok;
    return to_string(x.re) + "+" + jtok;
}

GiElement parse_gi(std::string_view text, const Field& host) {
    std::string s = strip_ws(text);
    if (s.empty()) throw error(errc::parse_error, "empty element");
    if (s.back() != 'j') return GiElement{parse_element(s, host), host.zero()};
    if (s == "j") return GiElement{host.zero(), host.one()};

    std::string re_text, im_text;
    split_gi(s, re_text, im_text);
    Element re = re_text.empty() ? host.zero() : parse_element(re_text, host);
    return GiElement{std::move(re), parse_element(im_text, host)};
}

std::string render_values(std::span<const GiElement> values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out.push_back(',');
        out += render_gi(values[i]);
    }
    return out;
}

std::vector<GiElement> parse_values(std::string_view text, const Field& host) {
    std::string s = strip_ws(text);
    if (s.empty()) throw error(errc::parse_error, "empty value list");
    std::vector<GiElement> out;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        std::string piece = s.substr(start, comma == std::string::npos ? comma : comma - start);
        if (piece.empty())
            throw error(errc::parse_error,
                        "empty entry at position " + std::to_string(start) + " in value list");
        out.push_back(parse_gi(piece, host));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::map<int64_t, GiElement> parse_assignments(std::string_view text, const Field& host) {
    std::string s = strip_ws(text);
    if (s.empty()) throw error(errc::parse_error, "empty assignment list");
    std::map<int64_t, GiElement> out;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string piece = s.substr(start, comma == std::string::npos ? comma : comma - start);
        size_t eq = piece.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == piece.size())
            throw error(errc::parse_error, "expected k=value at position " + std::to_string(start));
        std::string key_text = piece.substr(0, eq);
        if (!all_digits(key_text))
            throw error(errc::parse_error, "bad index \"" + key_text + "\" in assignment list");
        int64_t key = 0;
        auto [ptr, ec] = std::from_chars(key_text.data(), key_text.data() + key_text.size(), key);
        if (ec != std::errc{})
            throw error(errc::parse_error, "bad index \"" + key_text + "\" in assignment list");
        if (!out.emplace(key, parse_gi(piece.substr(eq + 1), host)).second)
            throw error(errc::parse_error, "duplicate index " + key_text + " in assignment list");
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string render_partition(const CyclotomicPartition& partition) {
    std::string out;
    for (size_t c = 0; c < partition.classes.size(); ++c) {
        if (c) out.push_back(' ');
        out += "C" + std::to_string(c) + "=(";
        for (size_t i = 0; i < partition.classes[c].size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(partition.classes[c][i]);
        }
        out.push_back(')');
    }
    return out;
}

std::string render_trig_grids(const TrigContext& ctx) {
    TrigTables tables = ctx.table();
    return render_grid("cos_k(i)", tables.cos, ctx.n()) + "\n" +
           render_grid("sin_k(i)", tables.sin, ctx.n());
}

} // namespace ffht
