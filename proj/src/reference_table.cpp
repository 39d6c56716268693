#include "dengfan/reference_table.hpp"

#include "dengfan/errors.hpp"

#include <charconv>
#include <string>

namespace dengfan {

namespace detail {
extern const char* const kTable3ReferenceCsv;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view text, const char* field, int line_no) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < T{}) {
        throw ParseError(field, "reference table line " + std::to_string(line_no) + ": bad " + field);
    }
    return value;
}

} // namespace

std::vector<ReferenceLevel> parse_reference_table(std::string_view csv) {
    std::vector<ReferenceLevel> rows;
    bool header_seen = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t end = csv.find('\n', pos);
        if (end == std::string_view::npos) end = csv.size();
        std::string_view line = csv.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;

        const auto cells = split(line, ',');
        if (!header_seen) {
            if (line != "molecule,n,l,nu,ap,morse") {
                throw ParseError("<header>", "reference table: unexpected header '" + std::string(line) + "'");
            }
            header_seen = true;
            continue;
        }
        if (cells.size() != 6) {
            throw ParseError("<record>", "reference table line " + std::to_string(line_no) + ": expected 6 columns");
        }
        ReferenceLevel r;
        r.molecule = std::string(cells[0]);
        r.n = parse_number<int>(cells[1], "n", line_no);
        r.l = parse_number<int>(cells[2], "l", line_no);
        r.e_nu = -parse_number<double>(cells[3], "nu", line_no);
        r.e_ap = -parse_number<double>(cells[4], "ap", line_no);
        r.e_morse = -parse_number<double>(cells[5], "morse", line_no);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string_view reference_table_csv() { return detail::kTable3ReferenceCsv; }

const std::vector<ReferenceLevel>& reference_table() {
    static const std::vector<ReferenceLevel> table = parse_reference_table(reference_table_csv());
    return table;
}

std::optional<ReferenceLevel> find_reference(std::string_view molecule, int n, int l) {
    for (const auto& r : reference_table()) {
        if (r.molecule == molecule && r.n == n && r.l == l) return r;
    }
    return std::nullopt;
}

} // namespace dengfan
