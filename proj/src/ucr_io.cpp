#include "trendpaa/ucr_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace trendpaa::ucr {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_on_char(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return fields;
}

std::vector<std::string> split_on_whitespace(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) fields.push_back(tok);
    return fields;
}

std::vector<std::string> split(const std::string& line, Delimiter delim) {
    switch (delim) {
        case Delimiter::comma: return split_on_char(line, ',');
        case Delimiter::tab: return split_on_char(line, '\t');
        case Delimiter::whitespace: return split_on_whitespace(line);
        case Delimiter::autodetect: break;
    }
    throw std::logic_error("split: unresolved delimiter");
}

// First delimiter producing at least two fields on the first data line
// wins: comma, then tab, then runs of spaces.
Delimiter detect(const std::string& first_line) {
    for (Delimiter d : {Delimiter::comma, Delimiter::tab, Delimiter::whitespace}) {
        if (split(first_line, d).size() >= 2) return d;
    }
    return Delimiter::whitespace;
}

double parse_field(const std::string& field, const std::string& origin, std::size_t line_no) {
    if (field.empty())
        throw ParseError(origin + ":" + std::to_string(line_no) + ": empty field");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size() || errno == ERANGE)
        throw ParseError(origin + ":" + std::to_string(line_no) + ": non-numeric field '" +
                         field + "'");
    if (!std::isfinite(v))
        throw ParseError(origin + ":" + std::to_string(line_no) + ": non-finite value '" +
                         field + "'");
    return v;
}

int parse_label(const std::string& field, const std::string& origin, std::size_t line_no) {
    const double v = parse_field(field, origin, line_no);
    if (v != std::trunc(v) || v < std::numeric_limits<int>::min() ||
        v > std::numeric_limits<int>::max())
        throw ParseError(origin + ":" + std::to_string(line_no) +
                         ": class label must be integer-valued, got '" + field + "'");
    return static_cast<int>(v);
}

char delimiter_char(Delimiter d) {
    switch (d) {
        case Delimiter::tab: return '\t';
        case Delimiter::whitespace: return ' ';
        case Delimiter::comma:
        case Delimiter::autodetect: break;
    }
    return ',';
}

} // namespace

LabeledDataset parse_ucr(std::istream& in, const std::string& origin, Delimiter delim) {
    LabeledDataset ds;
    std::string line;
    std::size_t line_no = 0;
    std::size_t expected_fields = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        if (delim == Delimiter::autodetect) delim = detect(line);

        const std::vector<std::string> fields = split(line, delim);
        if (fields.size() < 2)
            throw ParseError(origin + ":" + std::to_string(line_no) +
                             ": expected a label and at least one sample");
        if (expected_fields == 0) {
            expected_fields = fields.size();
        } else if (fields.size() != expected_fields) {
            throw ParseError(origin + ":" + std::to_string(line_no) + ": ragged row, got " +
                             std::to_string(fields.size() - 1) + " samples, expected " +
                             std::to_string(expected_fields - 1));
        }

        ds.labels.push_back(parse_label(fields[0], origin, line_no));
        std::vector<double> values;
        values.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i)
            values.push_back(parse_field(fields[i], origin, line_no));
        ds.series.emplace_back(std::move(values));
    }
    if (ds.series.empty()) throw std::invalid_argument(origin + ": empty dataset file");
    return ds;
}

LabeledDataset load_ucr_file(const std::filesystem::path& path, Delimiter delim) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open dataset file: " + path.string());
    return parse_ucr(in, path.string(), delim);
}

void write_ucr_file(const LabeledDataset& ds, const std::filesystem::path& path,
                    Delimiter delim) {
    ds.validate();
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path.string());
    const char sep = delimiter_char(delim);
    char buf[40];
    for (std::size_t i = 0; i < ds.size(); ++i) {
        out << ds.labels[i];
        for (double v : ds.series[i].values()) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            out << sep << buf;
        }
        out << '\n';
    }
}

DatasetPair load_dataset_pair(const std::filesystem::path& train_path,
                              const std::filesystem::path& test_path,
                              const std::string& name) {
    DatasetPair pair{load_ucr_file(train_path), load_ucr_file(test_path), name};
    if (pair.train.length() != pair.test.length())
        throw std::invalid_argument(name + ": train/test series lengths differ (" +
                                    std::to_string(pair.train.length()) + " vs " +
                                    std::to_string(pair.test.length()) + ")");
    return pair;
}

DatasetSummary dataset_summary(const DatasetPair& ds) {
    std::set<int> labels(ds.train.labels.begin(), ds.train.labels.end());
    labels.insert(ds.test.labels.begin(), ds.test.labels.end());
    return {ds.name, labels.size(), ds.train.size(), ds.test.size(), ds.train.length()};
}

} // namespace trendpaa::ucr
