#include "segmin/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace segmin {
namespace {

using json = nlohmann::ordered_json;

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;
}

// Pulls the next data line, skipping comments and blanks.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!is_comment_or_blank(line)) return true;
    }
    return false;
}

Value parse_cell(const std::string& token) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("not a non-negative integer: '" + token + "'");
    }
    if (pos != token.size() || token.front() == '-') {
        throw ParseError("not a non-negative integer: '" + token + "'");
    }
    if (v > kMaxCellValue) {
        throw ParseError("cell value " + token + " exceeds 2^32");
    }
    return v;
}

}  // namespace

IntensityMatrix read_matrix(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw ParseError("empty matrix file");
    std::istringstream header(line);
    long long m = 0, n = 0;
    if (!(header >> m >> n) || m < 1 || n < 1) {
        throw ParseError("matrix header must be 'm n' with positive dimensions");
    }
    std::string trailing;
    if (header >> trailing) throw ParseError("unexpected token after matrix header");

    std::vector<std::vector<Value>> rows;
    rows.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line)) {
            throw ParseError("expected " + std::to_string(m) + " data rows, got " +
                             std::to_string(i));
        }
        std::istringstream row_in(line);
        std::vector<Value> row;
        row.reserve(static_cast<std::size_t>(n));
        std::string token;
        while (row_in >> token) row.push_back(parse_cell(token));
        if (static_cast<long long>(row.size()) != n) {
            throw ParseError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(n));
        }
        rows.push_back(std::move(row));
    }
    if (next_data_line(in, line)) throw ParseError("unexpected extra data after matrix rows");
    return IntensityMatrix::from_rows(rows);
}

void write_matrix(std::ostream& out, const IntensityMatrix& t) {
    out << t.rows() << ' ' << t.cols() << '\n';
    for (int i = 1; i <= t.rows(); ++i) {
        auto row = t.row(i);
        for (int j = 0; j < t.cols(); ++j) {
            if (j) out << ' ';
            out << row[j];
        }
        out << '\n';
    }
}

Segmentation read_segmentation(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("segmentation document is not valid JSON: ") + e.what());
    }
    Segmentation s;
    try {
        s.m = doc.at("m").get<int>();
        s.n = doc.at("n").get<int>();
        for (const json& seg : doc.at("segments")) {
            SegmentMatrix sm;
            sm.value = seg.at("value").get<Value>();
            for (const json& row : seg.at("rows")) {
                int i = row.at("row").get<int>();
                int l = row.at("l").get<int>();
                int r = row.at("r").get<int>();
                if (sm.rows.count(i)) throw ParseError("duplicate row in segment");
                sm.rows[i] = {l, r};
            }
            if (sm.rows.empty()) throw ParseError("segment covering no rows");
            if (sm.value < 1 || sm.value > kMaxCellValue) {
                throw ParseError("segment value out of range");
            }
            s.segments.push_back(std::move(sm));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed segmentation document: ") + e.what());
    }
    if (s.m < 1 || s.n < 1) throw ParseError("segmentation dims must be positive");
    for (const SegmentMatrix& sm : s.segments) {
        for (const auto& [i, lr] : sm.rows) {
            if (i < 1 || i > s.m || lr.first < 1 || lr.first > lr.second || lr.second > s.n) {
                throw ParseError("segment interval out of range");
            }
        }
    }
    return s;
}

void write_segmentation(std::ostream& out, const Segmentation& s) {
    json doc;
    doc["m"] = s.m;
    doc["n"] = s.n;
    doc["segments"] = json::array();
    for (const SegmentMatrix& sm : s.segments) {
        json seg;
        seg["value"] = sm.value;
        seg["rows"] = json::array();
        for (const auto& [i, lr] : sm.rows) {
            seg["rows"].push_back({{"row", i}, {"l", lr.first}, {"r", lr.second}});
        }
        doc["segments"].push_back(std::move(seg));
    }
    out << doc.dump(2) << '\n';
}

namespace {

template <typename Fn>
auto with_input(const std::string& path, Fn fn) {
    if (path == "-") return fn(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "' for reading");
    return fn(in);
}

template <typename Fn>
void with_output(const std::string& path, Fn fn) {
    if (path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    fn(out);
}

}  // namespace

IntensityMatrix read_matrix_file(const std::string& path) {
    return with_input(path, [](std::istream& in) { return read_matrix(in); });
}

void write_matrix_file(const std::string& path, const IntensityMatrix& t) {
    with_output(path, [&](std::ostream& out) { write_matrix(out, t); });
}

Segmentation read_segmentation_file(const std::string& path) {
    return with_input(path, [](std::istream& in) { return read_segmentation(in); });
}

void write_segmentation_file(const std::string& path, const Segmentation& s) {
    with_output(path, [&](std::ostream& out) { write_segmentation(out, s); });
}

}  // namespace segmin
