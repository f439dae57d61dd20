#include "tukey/sample_matrix.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tukey/errors.hpp"

namespace tukey {

SampleMatrix::SampleMatrix(std::size_t rows, std::size_t dim, std::vector<double> data,
                           std::optional<Provenance> provenance)
    : rows_(rows), dim_(dim), data_(std::move(data)), provenance_(std::move(provenance)) {
    if (rows_ == 0 || dim_ == 0) {
        throw ValidationError("sample matrix needs n >= 1 and d >= 1");
    }
    if (data_.size() != rows_ * dim_) {
        throw ValidationError("sample matrix data size does not match n x d");
    }
    for (const double v : data_) {
        if (!std::isfinite(v)) {
            throw ValidationError("sample matrix entries must be finite");
        }
    }
}

SampleMatrix SampleMatrix::from_column(std::vector<double> values) {
    const auto n = values.size();
    return SampleMatrix(n, 1, std::move(values));
}

std::vector<double> SampleMatrix::column(std::size_t j) const {
    if (j >= dim_) {
        throw ValidationError("column index out of range");
    }
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = data_[i * dim_ + j];
    }
    return out;
}

SampleMatrix SampleMatrix::head(std::size_t count) const {
    if (count == 0 || count > rows_) {
        throw ValidationError("head size out of range");
    }
    std::vector<double> part(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * dim_));
    return SampleMatrix(count, dim_, std::move(part), provenance_);
}

std::string format_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

void write_csv(std::ostream& out, const SampleMatrix& sample) {
    for (std::size_t i = 0; i < sample.rows(); ++i) {
        const auto row = sample.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << format_double(row[j]);
        }
        out << '\n';
    }
}

void write_csv(const std::string& path, const SampleMatrix& sample) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot open output file '" + path + "'");
    }
    write_csv(out, sample);
}

namespace {

double parse_field(std::string_view field, const std::string& where) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
        field.remove_prefix(1);
    }
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
        field.remove_suffix(1);
    }
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size() || !std::isfinite(value)) {
        throw ValidationError(where + ": malformed number '" + std::string(field) + "'");
    }
    return value;
}

std::vector<double> split_numbers(std::string_view line, const std::string& where) {
    std::vector<double> values;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        values.push_back(parse_field(line.substr(start, comma - start), where));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return values;
}

}  // namespace

SampleMatrix read_csv(std::istream& in, const std::string& source_name) {
    std::vector<double> data;
    std::size_t dim = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const std::string where = source_name + ":" + std::to_string(line_no);
        auto values = split_numbers(line, where);
        if (dim == 0) {
            dim = values.size();
        } else if (values.size() != dim) {
            throw ValidationError(where + ": expected " + std::to_string(dim) + " columns, found " +
                                  std::to_string(values.size()));
        }
        data.insert(data.end(), values.begin(), values.end());
        ++rows;
    }
    if (rows == 0) {
        throw ValidationError(source_name + ": no data rows");
    }
    return SampleMatrix(rows, dim, std::move(data));
}

SampleMatrix read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open points file '" + path + "'");
    }
    return read_csv(in, path);
}

std::vector<double> parse_vector(const std::string& text) {
    if (text.find_first_not_of(" \t") == std::string::npos) {
        throw ValidationError("empty vector '" + text + "'");
    }
    return split_numbers(text, "vector '" + text + "'");
}

}  // namespace tukey
